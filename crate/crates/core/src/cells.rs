//! Staircases, Hilbert–Burch matrices and their spread-out families, the
//! resultant `res_E`, Białynicki-Birula cell restriction and the checks
//! built on top of them.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Arc;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::groebner::{colength, gm_limit, ideal_equal, Colength, GroebnerError, Ideal};
use crate::linalg::{
    determinant, determinant_weight, maximal_minors, monic_resultant, multiplication_matrix,
    rational_rank, LinalgError, PolyMatrix,
};
use crate::poly::{
    format_rational, parse_rational, Homogeneity, Monomial, ParamTag, PolyError, Polynomial, Rational, Var,
    VariableSet, WeightAssignment,
};
use crate::torus::Cocharacter;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CellError {
    #[error("invalid staircase {0:?}: need a non-decreasing sequence with positive last entry")]
    InvalidStaircase(Vec<u32>),
    #[error("parameter {0} is not in the registry")]
    UnknownParameter(ParamTag),
    #[error("parameter {0} lies outside the cell")]
    OffCell(ParamTag),
    #[error("bad assignment: {0}")]
    Assignment(String),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error(transparent)]
    Groebner(#[from] GroebnerError),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// `E = (x^t, x^{t-1} y^{m_1}, ..., y^{m_t})`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "StaircaseJson", into = "StaircaseJson")]
pub struct Staircase {
    m: Vec<u32>,
}

#[derive(Serialize, Deserialize)]
struct StaircaseJson {
    m: Vec<u32>,
}

impl TryFrom<StaircaseJson> for Staircase {
    type Error = CellError;
    fn try_from(j: StaircaseJson) -> Result<Self, CellError> {
        Staircase::new(j.m)
    }
}

impl From<Staircase> for StaircaseJson {
    fn from(s: Staircase) -> Self {
        StaircaseJson { m: s.m }
    }
}

impl Staircase {
    pub fn new(m: Vec<u32>) -> Result<Self, CellError> {
        let ok = m.last().is_some_and(|&l| l >= 1) && m.windows(2).all(|w| w[0] <= w[1]);
        if ok {
            Ok(Staircase { m })
        } else {
            Err(CellError::InvalidStaircase(m))
        }
    }

    /// Every staircase of colength `d` with `m_1 >= 1`, in lexicographic order of `m`.
    pub fn all_of_colength(d: u32) -> Vec<Staircase> {
        fn go(rest: u32, min: u32, cur: &mut Vec<u32>, out: &mut Vec<Staircase>) {
            if rest == 0 {
                out.push(Staircase { m: cur.clone() });
                return;
            }
            for next in min..=rest {
                cur.push(next);
                go(rest - next, next, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        if d > 0 {
            go(d, 1, &mut Vec::new(), &mut out);
        }
        out
    }

    pub fn m(&self) -> &[u32] {
        &self.m
    }

    pub fn t(&self) -> usize {
        self.m.len()
    }

    /// `m_i` for `0 <= i <= t`, with `m_0 = 0`.
    pub fn m_at(&self, i: usize) -> u32 {
        if i == 0 {
            0
        } else {
            self.m[i - 1]
        }
    }

    /// `d_i = m_i - m_{i-1}`, 1-based.
    pub fn d_at(&self, i: usize) -> u32 {
        self.m_at(i) - self.m_at(i - 1)
    }

    pub fn diffs(&self) -> Vec<u32> {
        (1..=self.t()).map(|i| self.d_at(i)).collect()
    }

    pub fn colength(&self) -> u32 {
        self.m.iter().sum()
    }

    /// `t * m_t`, the expected y-degree of `res_E`.
    pub fn target_degree(&self) -> u32 {
        self.t() as u32 * self.m_at(self.t())
    }

    /// `x^{t-i} y^{m_i}` for `i = 0..=t`.
    pub fn generators(&self, ring: &Arc<VariableSet>) -> Vec<Polynomial> {
        let (ix, iy) = (ring.index_of(Var::X).expect("x"), ring.index_of(Var::Y).expect("y"));
        (0..=self.t())
            .map(|i| {
                let mut e = vec![0; ring.len()];
                e[ix] = (self.t() - i) as u32;
                e[iy] = self.m_at(i);
                Polynomial::monomial(ring, Monomial(e), Rational::one())
            })
            .collect()
    }

    pub fn ideal(&self) -> Ideal {
        let plane = VariableSet::plane();
        Ideal::new(&plane, self.generators(&plane)).expect("plane generators")
    }

    /// `x^a y^b` with `a < t`, `b < m_{t-a}`, as exponent pairs.
    pub fn standard_monomials(&self) -> Vec<(u32, u32)> {
        let t = self.t();
        (0..t)
            .flat_map(|a| (0..self.m_at(t - a)).map(move |b| (a as u32, b)))
            .collect()
    }

    pub fn contains_monomial(&self, a: u32, b: u32) -> bool {
        (0..=self.t()).any(|i| a as usize >= self.t() - i && b >= self.m_at(i))
    }
}

impl fmt::Display for Staircase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let m: Vec<String> = self.m.iter().map(ToString::to_string).collect();
        write!(f, "({})", m.join(","))
    }
}

/// Coefficient `a[i,j,k]` of `y^k` in entry `(i, j)` of the spread-out matrix.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ParamIndex {
    pub tag: ParamTag,
    pub weight: (i64, i64),
}

impl ParamIndex {
    pub fn var(&self) -> Var {
        Var::Param(self.tag)
    }
}

/// Upper bound (exclusive) on `k` for entry `(i, j)`.
fn k_bound(e: &Staircase, i: usize, j: usize) -> u32 {
    if i > j {
        e.d_at(j)
    } else {
        e.d_at(i)
    }
}

/// `(U_x(i,j), U_y(i,j)) = (i - j, m_j - m_{i-1})`.
fn entry_weight(e: &Staircase, i: usize, j: usize) -> (i64, i64) {
    (i as i64 - j as i64, e.m_at(j) as i64 - e.m_at(i - 1) as i64)
}

pub fn registry(e: &Staircase) -> Vec<ParamIndex> {
    let t = e.t();
    let mut out = Vec::new();
    for i in 1..=t + 1 {
        for j in 1..=t {
            let (wx, wy) = entry_weight(e, i, j);
            for k in 0..k_bound(e, i, j) {
                out.push(ParamIndex {
                    tag: ParamTag::new(i as u32, j as u32, k),
                    weight: (wx, wy - k as i64),
                });
            }
        }
    }
    out.sort();
    out
}

pub fn hilbert_burch_matrix(e: &Staircase) -> PolyMatrix {
    let ring = VariableSet::plane();
    let t = e.t();
    let mut m = PolyMatrix::zeros(&ring, t + 1, t);
    for i in 0..t {
        m.set(i, i, Polynomial::var_pow(&ring, Var::Y, e.d_at(i + 1)).expect("y"));
        m.set(i + 1, i, -Polynomial::var(&ring, Var::X).expect("x"));
    }
    m
}

/// `(U_x, U_y)` as `(t+1) x t` integer grids.
pub fn degree_matrices(e: &Staircase) -> (Vec<Vec<i64>>, Vec<Vec<i64>>) {
    let t = e.t();
    let grid = |pick: fn((i64, i64)) -> i64| {
        (1..=t + 1)
            .map(|i| (1..=t).map(|j| pick(entry_weight(e, i, j))).collect())
            .collect()
    };
    (grid(|w| w.0), grid(|w| w.1))
}

/// The symbolic family over the base with coordinates `a[i,j,k]`.
#[derive(Clone, Debug)]
pub struct SpreadOutMatrix {
    staircase: Staircase,
    ring: Arc<VariableSet>,
    matrix: PolyMatrix,
    registry: Vec<ParamIndex>,
}

pub fn spread_out(e: &Staircase) -> SpreadOutMatrix {
    let registry = registry(e);
    let ring = VariableSet::with_params(registry.iter().map(|p| p.tag));
    let hb = hilbert_burch_matrix(e);
    let t = e.t();
    let mut matrix = PolyMatrix::zeros(&ring, t + 1, t);
    let y = Polynomial::var(&ring, Var::Y).expect("y");
    for i in 0..=t {
        for j in 0..t {
            let mut entry = hb.get(i, j).to_ambient(&ring).expect("plane into full ring");
            for p in registry.iter().filter(|p| p.tag.i as usize == i + 1 && p.tag.j as usize == j + 1) {
                let a = Polynomial::var(&ring, p.var()).expect("registered");
                entry = &entry + &(&a * &y.pow(p.tag.k));
            }
            matrix.set(i, j, entry);
        }
    }
    SpreadOutMatrix { staircase: e.clone(), ring, matrix, registry }
}

/// Which parameters stay free; the rest are set to zero.
#[derive(Clone, Debug)]
pub enum ParamSubset<'a> {
    All,
    Cell(&'a CellRestriction),
    Only(&'a [ParamTag]),
}

impl SpreadOutMatrix {
    pub fn staircase(&self) -> &Staircase {
        &self.staircase
    }

    pub fn ring(&self) -> &Arc<VariableSet> {
        &self.ring
    }

    pub fn matrix(&self) -> &PolyMatrix {
        &self.matrix
    }

    pub fn registry(&self) -> &[ParamIndex] {
        &self.registry
    }

    pub fn param(&self, tag: ParamTag) -> Result<&ParamIndex, CellError> {
        self.registry
            .iter()
            .find(|p| p.tag == tag)
            .ok_or(CellError::UnknownParameter(tag))
    }

    /// x ↦ (1,0), y ↦ (0,1), every parameter ↦ its weight, t and u ↦ 0.
    pub fn weights(&self) -> WeightAssignment {
        WeightAssignment::new(
            self.ring
                .vars()
                .iter()
                .map(|v| match v {
                    Var::X => (1, 0),
                    Var::Y => (0, 1),
                    Var::Param(tag) => self.param(*tag).map(|p| p.weight).unwrap_or((0, 0)),
                    _ => (0, 0),
                })
                .collect(),
        )
    }

    fn kept_tags(&self, subset: &ParamSubset) -> Result<Vec<ParamTag>, CellError> {
        let tags: Vec<ParamTag> = match subset {
            ParamSubset::All => return Ok(self.registry.iter().map(|p| p.tag).collect()),
            ParamSubset::Cell(r) => r.kept.iter().map(|k| k.param.tag).collect(),
            ParamSubset::Only(tags) => tags.to_vec(),
        };
        for &t in &tags {
            self.param(t)?;
        }
        Ok(tags)
    }

    /// The matrix with every parameter outside `subset` set to zero.
    pub fn restricted(&self, subset: &ParamSubset) -> Result<PolyMatrix, CellError> {
        let keep = self.kept_tags(subset)?;
        let zeros: HashMap<Var, Rational> = self
            .registry
            .iter()
            .filter(|p| !keep.contains(&p.tag))
            .map(|p| (p.var(), Rational::zero()))
            .collect();
        if zeros.is_empty() {
            return Ok(self.matrix.clone());
        }
        Ok(self.matrix.map(|p| p.specialize(&zeros))?)
    }

    /// Symbolic maximal minors of the (restricted) matrix; entry `i` deletes row `i + 1`.
    pub fn minors(&self, subset: &ParamSubset) -> Result<Vec<Polynomial>, CellError> {
        Ok(maximal_minors(&self.restricted(subset)?)?)
    }

    /// The matrix at a rational point of the base, over `k[x, y]`.
    pub fn specialize(&self, assignment: &Assignment) -> Result<PolyMatrix, CellError> {
        for tag in assignment.values.keys() {
            self.param(*tag)?;
        }
        let values: HashMap<Var, Rational> = self
            .registry
            .iter()
            .map(|p| (p.var(), assignment.values.get(&p.tag).cloned().unwrap_or_else(Rational::zero)))
            .collect();
        let plane = VariableSet::plane();
        let rows = (0..self.matrix.rows())
            .map(|r| {
                self.matrix
                    .row(r)
                    .iter()
                    .map(|p| p.specialize(&values)?.to_ambient(&plane))
                    .collect::<Result<Vec<_>, _>>()
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(PolyMatrix::from_rows(&plane, rows)?)
    }
}

/// Rational values for some parameters; the others are zero.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Assignment {
    pub values: BTreeMap<ParamTag, Rational>,
}

impl Assignment {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn set(mut self, tag: ParamTag, value: Rational) -> Self {
        self.values.insert(tag, value);
        self
    }

    /// JSON object `{"a[i,j,k]": "p/q"}`. Integers may also be given as numbers.
    pub fn from_json(text: &str) -> Result<Self, CellError> {
        let raw: BTreeMap<String, serde_json::Value> =
            serde_json::from_str(text).map_err(|e| CellError::Assignment(e.to_string()))?;
        let mut values = BTreeMap::new();
        for (k, v) in raw {
            let tag: ParamTag = k.parse()?;
            let value = match v {
                serde_json::Value::String(s) => parse_rational(&s)?,
                serde_json::Value::Number(n) => parse_rational(&n.to_string())?,
                other => return Err(CellError::Assignment(format!("value for {k}: {other}"))),
            };
            values.insert(tag, value);
        }
        Ok(Assignment { values })
    }

    pub fn to_json_map(&self) -> BTreeMap<String, String> {
        self.values.iter().map(|(k, v)| (k.to_string(), format_rational(v))).collect()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_json_map()).expect("string map")
    }

    /// Acts by `λ`: each parameter is multiplied by `λ1^{w_x} λ2^{w_y}`.
    ///
    /// With this convention `I(λ·a) = { f(x/λ1, y/λ2) : f ∈ I(a) }`, i.e. the
    /// points of `I(a)` move by `(x, y) ↦ (λ1 x, λ2 y)`. The zero assignment
    /// is fixed.
    pub fn torus_scaled(&self, m: &SpreadOutMatrix, l1: &Rational, l2: &Rational) -> Result<Self, CellError> {
        let pow = |base: &Rational, e: i64| -> Rational {
            if e >= 0 {
                num_traits::pow(base.clone(), e as usize)
            } else {
                num_traits::pow(base.recip(), (-e) as usize)
            }
        };
        let mut values = BTreeMap::new();
        for (tag, v) in &self.values {
            let (wx, wy) = m.param(*tag)?.weight;
            values.insert(*tag, v * pow(l1, wx) * pow(l2, wy));
        }
        Ok(Assignment { values })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Plus,
    Minus,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Plus => "plus",
            Mode::Minus => "minus",
        })
    }
}

/// Maximal minors at a point; in minus mode `y^{t m_t}` is appended.
pub fn minors_ideal(m: &SpreadOutMatrix, assignment: &Assignment, mode: Mode) -> Result<Ideal, CellError> {
    let plane = VariableSet::plane();
    let mut gens = maximal_minors(&m.specialize(assignment)?)?;
    if mode == Mode::Minus {
        gens.push(Polynomial::var_pow(&plane, Var::Y, m.staircase.target_degree())?);
    }
    Ok(Ideal::new(&plane, gens)?)
}

/// The two minors defining `res_E`: row 1 deleted (made monic in `x`) and row `t+1` deleted.
pub fn res_e_minors(m: &SpreadOutMatrix, subset: &ParamSubset) -> Result<(Polynomial, Polynomial), CellError> {
    let mat = m.restricted(subset)?;
    let t = m.staircase.t();
    let first = determinant(&mat.without_row(0))?;
    let last = determinant(&mat.without_row(t))?;
    let first = if t % 2 == 1 { -first } else { first };
    Ok((first, last))
}

/// `Res_x(±minor_1, minor_{t+1})`, with the first minor normalized to be monic in `x`.
pub fn resultant_res_e(m: &SpreadOutMatrix, subset: &ParamSubset) -> Result<Polynomial, CellError> {
    let (first, last) = res_e_minors(m, subset)?;
    Ok(monic_resultant(&first, &last, Var::X)?)
}

/// Weight of `res_E` certified from the graded multiplication matrix whose
/// determinant it is, without expanding the determinant.
pub fn res_e_weight(m: &SpreadOutMatrix, subset: &ParamSubset) -> Result<Homogeneity, CellError> {
    let (first, last) = res_e_minors(m, subset)?;
    if last.degree_in(Var::X)?.finite() == Some(0) {
        // res = last^t
        return Ok(match last.weight_check(&m.weights()) {
            Homogeneity::Homogeneous((a, b)) => {
                let t = m.staircase.t() as i64;
                Homogeneity::Homogeneous((a * t, b * t))
            }
            h => h,
        });
    }
    Ok(determinant_weight(&multiplication_matrix(&first, &last, Var::X)?, &m.weights()))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KeptParam {
    pub param: ParamIndexJson,
    pub pairing: i64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParamIndexJson {
    #[serde(with = "tag_string")]
    pub tag: ParamTag,
    pub weight: (i64, i64),
}

impl From<ParamIndex> for ParamIndexJson {
    fn from(p: ParamIndex) -> Self {
        ParamIndexJson { tag: p.tag, weight: p.weight }
    }
}

mod tag_string {
    use crate::poly::ParamTag;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(t: &ParamTag, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(t)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<ParamTag, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Base coordinates spanning the cell of `ψ` centred at `E`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CellRestriction {
    pub staircase: Staircase,
    pub cocharacter: Cocharacter,
    pub kept: Vec<KeptParam>,
    pub isolated_origin: bool,
    pub mode: Mode,
}

impl CellRestriction {
    pub fn kept_tags(&self) -> Vec<ParamTag> {
        self.kept.iter().map(|k| k.param.tag).collect()
    }

    pub fn keeps(&self, tag: ParamTag) -> bool {
        self.kept.iter().any(|k| k.param.tag == tag)
    }
}

pub fn cell_restrict(m: &SpreadOutMatrix, psi: Cocharacter) -> CellRestriction {
    let kept: Vec<KeptParam> = m
        .registry
        .iter()
        .map(|p| KeptParam { param: (*p).into(), pairing: psi.pairing(p.weight) })
        .filter(|k| k.pairing >= 0)
        .collect();
    CellRestriction {
        staircase: m.staircase.clone(),
        cocharacter: psi,
        isolated_origin: kept.iter().all(|k| k.pairing > 0),
        mode: if psi.beta() >= 0 { Mode::Plus } else { Mode::Minus },
        kept,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Theorem {
    Abb,
    AbbMinus,
    None,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Yes,
    No,
    Unknown,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CriterionReport {
    pub res: String,
    pub deg_y: Option<u32>,
    pub target: u32,
    /// Coefficient of the highest power of `y` in `res`.
    pub top_coefficient: String,
    /// Coefficient of `y^{t m_t}` in `res`.
    pub u: String,
    pub flat_locus_nonempty: bool,
    pub finiteness_degree_met: bool,
    pub theorem_applied: Theorem,
    pub isomorphism_onto_cell: Verdict,
}

pub fn criterion_report(m: &SpreadOutMatrix, restriction: Option<&CellRestriction>) -> Result<CriterionReport, CellError> {
    let subset = restriction.map_or(ParamSubset::All, ParamSubset::Cell);
    let res = resultant_res_e(m, &subset)?;
    criterion_from_res(m, &res, restriction)
}

/// The report for an already computed resultant.
pub fn criterion_from_res(
    m: &SpreadOutMatrix,
    res: &Polynomial,
    restriction: Option<&CellRestriction>,
) -> Result<CriterionReport, CellError> {
    let target = m.staircase.target_degree();
    let (deg, coeffs) = res.degree_and_coeff(Var::Y)?;
    let deg_y = deg.finite();
    let zero = Polynomial::zero(res.ambient());
    let top = deg_y.and_then(|d| coeffs.get(&d)).unwrap_or(&zero);
    let u = coeffs.get(&target).unwrap_or(&zero);
    let (theorem_applied, isomorphism_onto_cell) = match restriction {
        None => (Theorem::None, Verdict::Unknown),
        Some(r) => (
            match r.mode {
                Mode::Plus => Theorem::Abb,
                Mode::Minus => Theorem::AbbMinus,
            },
            if r.isolated_origin { Verdict::Yes } else { Verdict::Unknown },
        ),
    };
    Ok(CriterionReport {
        res: res.to_string(),
        deg_y,
        target,
        top_coefficient: top.to_string(),
        u: u.to_string(),
        flat_locus_nonempty: !res.is_zero(),
        finiteness_degree_met: deg_y == Some(target),
        theorem_applied,
        isomorphism_onto_cell,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub colength: Colength,
    pub colength_ok: bool,
    /// `None` when no cocharacter was supplied.
    pub limit_ok: Option<bool>,
    pub generators: Vec<String>,
    pub limit: Option<Vec<String>>,
    pub details: String,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.colength_ok && self.limit_ok != Some(false)
    }
}

/// Checks that a point of the base is a point of the cell: the fiber has
/// colength `d` and flows to `E` under `ψ`.
pub fn verify_point(
    m: &SpreadOutMatrix,
    restriction: Option<&CellRestriction>,
    assignment: &Assignment,
) -> Result<VerifyReport, CellError> {
    if let Some(r) = restriction {
        if let Some(tag) = assignment.values.keys().find(|t| !r.keeps(**t)) {
            m.param(*tag)?;
            return Err(CellError::OffCell(*tag));
        }
    }
    let mode = restriction.map_or(Mode::Plus, |r| r.mode);
    let ideal = minors_ideal(m, assignment, mode)?;
    let d = m.staircase.colength() as usize;
    let col = colength(&ideal);
    let colength_ok = col == Colength::Finite(d);
    let generators = ideal.to_strings();
    let (limit_ok, limit, details) = match (restriction, col) {
        (None, _) => (None, None, format!("colength {col}, expected {d}")),
        (Some(_), Colength::Infinite) => (
            Some(false),
            None,
            "fiber has infinite colength, no limit".to_string(),
        ),
        (Some(r), Colength::Finite(_)) => {
            let lim = gm_limit(&ideal, &r.cocharacter)?;
            let ok = ideal_equal(&lim, &m.staircase.ideal())?;
            let details = format!("colength {col}, expected {d}; limit {lim}");
            (Some(ok), Some(lim.to_strings()), details)
        }
    };
    Ok(VerifyReport { colength: col, colength_ok, limit_ok, generators, limit, details })
}

/// Coefficients of `p mod E` on the standard monomials of `E`.
fn standard_coordinates(e: &Staircase, p: &Polynomial) -> Vec<Rational> {
    let ring = p.ambient();
    let (ix, iy) = (ring.index_of(Var::X).expect("x"), ring.index_of(Var::Y).expect("y"));
    let mut by_exp: HashMap<(u32, u32), Rational> = HashMap::new();
    for (mono, c) in p.terms() {
        by_exp.insert((mono.0[ix], mono.0[iy]), c.clone());
    }
    e.standard_monomials()
        .into_iter()
        .map(|ab| by_exp.remove(&ab).unwrap_or_else(Rational::zero))
        .collect()
}

/// Row of the tangent map for each parameter: `∂ minor_i / ∂ p` at the
/// origin, reduced modulo `E`, over all minors.
pub fn tangent_matrix(e: &Staircase) -> Result<Vec<Vec<Rational>>, CellError> {
    let m = spread_out(e);
    let mut rows = Vec::with_capacity(m.registry.len());
    for p in &m.registry {
        let only = [p.tag];
        let minors = m.minors(&ParamSubset::Only(&only))?;
        let at_zero = HashMap::from([(p.var(), Rational::zero())]);
        let mut row = Vec::new();
        for minor in minors {
            let deriv = minor.partial_derivative(p.var())?.specialize(&at_zero)?;
            row.extend(standard_coordinates(e, &deriv));
        }
        rows.push(row);
    }
    Ok(rows)
}

pub fn tangent_map_rank(e: &Staircase) -> Result<usize, CellError> {
    Ok(rational_rank(&tangent_matrix(e)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::cofactor_determinant;
    use crate::poly::int;

    fn st(m: &[u32]) -> Staircase {
        Staircase::new(m.to_vec()).unwrap()
    }

    fn tag(i: u32, j: u32, k: u32) -> ParamTag {
        ParamTag::new(i, j, k)
    }

    #[test]
    fn staircase_basics() {
        let e = st(&[1, 1, 3]);
        assert_eq!(e.t(), 3);
        assert_eq!(e.diffs(), vec![1, 0, 2]);
        assert_eq!(e.colength(), 5);
        assert_eq!(colength(&e.ideal()), Colength::Finite(5));

        let e = st(&[2, 2]);
        let plane = VariableSet::plane();
        assert!(ideal_equal(&e.ideal(), &Ideal::parse(&plane, &["y^2", "x^2"]).unwrap()).unwrap());
        assert_eq!(e.colength(), 4);

        let e = st(&[1]);
        assert!(ideal_equal(&e.ideal(), &Ideal::parse(&plane, &["x", "y"]).unwrap()).unwrap());

        assert!(Staircase::new(vec![2, 1]).is_err());
        assert!(Staircase::new(vec![]).is_err());
        assert!(Staircase::new(vec![0]).is_err());
        assert!(serde_json::from_str::<Staircase>(r#"{"m":[3,1]}"#).is_err());
    }

    #[test]
    fn partitions_are_counted() {
        let counts: Vec<usize> = (1..=8).map(|d| Staircase::all_of_colength(d).len()).collect();
        assert_eq!(counts, vec![1, 2, 3, 5, 7, 11, 15, 22]);
    }

    #[test]
    fn standard_monomials_count_colength() {
        for d in 1..=7 {
            for e in Staircase::all_of_colength(d) {
                let std = e.standard_monomials();
                assert_eq!(std.len(), d as usize);
                assert!(std.iter().all(|&(a, b)| !e.contains_monomial(a, b)));
            }
        }
    }

    #[test]
    fn hilbert_burch_examples() {
        let plane = VariableSet::plane();
        let hb = hilbert_burch_matrix(&st(&[1, 1, 3]));
        let want = PolyMatrix::parse(&plane, "y | 0 | 0\n-x | 1 | 0\n0 | -x | y^2\n0 | 0 | -x").unwrap();
        assert_eq!(hb, want);
        let hb = hilbert_burch_matrix(&st(&[3, 3]));
        assert_eq!(hb, PolyMatrix::parse(&plane, "y^3 | 0\n-x | 1\n0 | -x").unwrap());
        assert_eq!(hilbert_burch_matrix(&st(&[1])), PolyMatrix::parse(&plane, "y\n-x").unwrap());
    }

    #[test]
    fn hilbert_burch_minors_generate_e() {
        for d in 1..=6 {
            for e in Staircase::all_of_colength(d) {
                let minors = maximal_minors(&hilbert_burch_matrix(&e)).unwrap();
                let ideal = Ideal::new(&VariableSet::plane(), minors).unwrap();
                assert!(ideal_equal(&ideal, &e.ideal()).unwrap(), "{e}");
            }
        }
    }

    #[test]
    fn registry_examples() {
        let r = registry(&st(&[2, 2]));
        let tags: Vec<String> = r.iter().map(|p| p.tag.to_string()).collect();
        assert_eq!(
            tags,
            ["a[1,1,0]", "a[1,1,1]", "a[1,2,0]", "a[1,2,1]", "a[2,1,0]", "a[2,1,1]", "a[3,1,0]", "a[3,1,1]"]
        );
        assert_eq!(registry(&st(&[1, 1, 3])).len(), 10);
        let r = registry(&st(&[2, 2, 2]));
        assert_eq!(r.len(), 12);
        assert!(r.iter().all(|p| p.tag.i == 1 || p.tag.j == 1));
    }

    #[test]
    fn printed_weights() {
        let m = spread_out(&st(&[3, 7, 13]));
        assert_eq!(m.param(tag(1, 2, 2)).unwrap().weight, (-1, 5));
        assert_eq!(m.param(tag(4, 3, 5)).unwrap().weight, (1, -5));
    }

    #[test]
    fn degree_matrix_examples() {
        let (ux, uy) = degree_matrices(&st(&[1, 1, 3]));
        assert_eq!(ux, vec![vec![0, -1, -2], vec![1, 0, -1], vec![2, 1, 0], vec![3, 2, 1]]);
        assert_eq!(uy, vec![vec![1, 1, 3], vec![0, 0, 2], vec![0, 0, 2], vec![-2, -2, 0]]);
        let (ux, uy) = degree_matrices(&st(&[1]));
        assert_eq!(ux, vec![vec![0], vec![1]]);
        assert_eq!(uy, vec![vec![1], vec![0]]);
    }

    #[test]
    fn entries_are_homogeneous() {
        for e in [st(&[1, 1, 3]), st(&[2, 3, 3]), st(&[3, 7, 13])] {
            let m = spread_out(&e);
            let w = m.weights();
            for i in 0..=e.t() {
                for j in 0..e.t() {
                    let h = m.matrix().get(i, j).weight_check(&w);
                    let want = entry_weight(&e, i + 1, j + 1);
                    assert!(matches!(h, Homogeneity::Any) || h == Homogeneity::Homogeneous(want));
                }
            }
        }
    }

    #[test]
    fn non_flat_family_minors() {
        let m = spread_out(&st(&[2, 2]));
        let keep = [tag(1, 2, 1), tag(2, 1, 1)];
        let minors = m.minors(&ParamSubset::Only(&keep)).unwrap();
        let r = m.ring();
        let p = |s: &str| Polynomial::parse(r, s).unwrap();
        let (a, b) = ("a[1,2,1]", "a[2,1,1]");
        let want = [
            p(&format!("x^2 - x*y*{b}")),
            p("-x*y^2"),
            p(&format!("y^2*(1 - {b}*{a}) + x*y*{a}")),
        ];
        for (got, w) in minors.iter().zip(&want) {
            assert!(got == w || *got == -w.clone(), "{got} vs {w}");
        }
    }

    #[test]
    fn zero_assignment_gives_e() {
        for d in 1..=6 {
            for e in Staircase::all_of_colength(d) {
                let m = spread_out(&e);
                let i = minors_ideal(&m, &Assignment::new(), Mode::Plus).unwrap();
                assert!(ideal_equal(&i, &e.ideal()).unwrap());
            }
        }
    }

    #[test]
    fn unknown_parameter_is_rejected() {
        let m = spread_out(&st(&[2, 2]));
        let a = Assignment::new().set(tag(2, 2, 0), int(1));
        assert_eq!(minors_ideal(&m, &a, Mode::Plus), Err(CellError::UnknownParameter(tag(2, 2, 0))));
    }

    #[test]
    fn resultant_examples() {
        let m = spread_out(&st(&[2, 2]));
        let keep = [tag(1, 2, 1), tag(2, 1, 1)];
        let res = resultant_res_e(&m, &ParamSubset::Only(&keep)).unwrap();
        let want = Polynomial::parse(m.ring(), "y^4*(1 - a[2,1,1]*a[1,2,1])").unwrap();
        assert!(res == want || res == -want.clone(), "{res}");

        let m = spread_out(&st(&[3, 3]));
        let keep = [tag(1, 2, 2), tag(2, 1, 2)];
        let res = resultant_res_e(&m, &ParamSubset::Only(&keep)).unwrap();
        let want = Polynomial::parse(m.ring(), "y^7*a[1,2,2]*a[2,1,2] - y^6").unwrap();
        assert!(res == want || res == -want.clone(), "{res}");
    }

    #[test]
    fn origin_resultant() {
        for e in [st(&[1]), st(&[2, 5]), st(&[1, 1, 3])] {
            let m = spread_out(&e);
            let res = resultant_res_e(&m, &ParamSubset::Only(&[])).unwrap();
            assert_eq!(res, Polynomial::var_pow(m.ring(), Var::Y, e.target_degree()).unwrap());
        }
    }

    #[test]
    fn certified_weight_matches_expansion() {
        for d in 1..=5 {
            for e in Staircase::all_of_colength(d) {
                let m = spread_out(&e);
                let res = resultant_res_e(&m, &ParamSubset::All).unwrap();
                let want = Homogeneity::Homogeneous((0, e.target_degree() as i64));
                assert_eq!(res.weight_check(&m.weights()), want, "{e}");
                assert_eq!(res_e_weight(&m, &ParamSubset::All).unwrap(), want, "{e}");
            }
        }
    }

    #[test]
    fn cell_examples() {
        let m = spread_out(&st(&[1, 2]));
        let c = cell_restrict(&m, Cocharacter::new(1, -1).unwrap());
        let kept: Vec<String> = c.kept_tags().iter().map(ToString::to_string).collect();
        assert_eq!(kept, ["a[2,1,0]", "a[3,1,0]", "a[3,2,0]"]);
        assert!(c.isolated_origin);
        assert_eq!(c.mode, Mode::Minus);

        let e = st(&[1, 2]);
        let big_m = 2 * e.target_degree() as i64 + 1;
        let c = cell_restrict(&m, Cocharacter::new(-1, -big_m).unwrap());
        assert_eq!(c.mode, Mode::Minus);

        let m = spread_out(&st(&[3, 7, 13]));
        let c = cell_restrict(&m, Cocharacter::new(5, 1).unwrap());
        assert!(!c.isolated_origin);
        let zero: Vec<ParamTag> = c.kept.iter().filter(|k| k.pairing == 0).map(|k| k.param.tag).collect();
        assert!(zero.contains(&tag(1, 2, 2)) && zero.contains(&tag(4, 3, 5)));

        let m = spread_out(&st(&[1]));
        for (a, b) in [(1, 1), (-1, 1), (1, -1), (-1, -1), (0, 1)] {
            let c = cell_restrict(&m, Cocharacter::new(a, b).unwrap());
            let mut want = Vec::new();
            // a[1,1,0] has weight (0,1), a[2,1,0] has weight (1,0)
            if b >= 0 {
                want.push(tag(1, 1, 0));
            }
            if a >= 0 {
                want.push(tag(2, 1, 0));
            }
            assert_eq!(c.kept_tags(), want);
        }
    }

    #[test]
    fn criterion_without_restriction() {
        let m = spread_out(&st(&[3, 3]));
        let r = criterion_report(&m, None).unwrap();
        assert_eq!(r.deg_y, Some(7));
        assert!(!r.finiteness_degree_met);
        assert_eq!(r.theorem_applied, Theorem::None);
    }

    #[test]
    fn verify_examples() {
        let m = spread_out(&st(&[3, 3]));
        let a = Assignment::new().set(tag(1, 2, 2), int(1)).set(tag(2, 1, 2), int(1));
        let r = verify_point(&m, None, &a).unwrap();
        assert!(!r.colength_ok);
        assert!(matches!(r.colength, Colength::Finite(n) if n >= 7) || r.colength == Colength::Infinite);

        let psi = Cocharacter::new(-3, 2).unwrap();
        let c = cell_restrict(&m, psi);
        let r = verify_point(&m, Some(&c), &Assignment::new()).unwrap();
        assert!(r.passed());

        let off = Assignment::new().set(tag(2, 1, 2), int(1));
        assert!(!c.keeps(tag(2, 1, 2)));
        assert_eq!(verify_point(&m, Some(&c), &off), Err(CellError::OffCell(tag(2, 1, 2))));
    }

    #[test]
    fn tangent_rank_examples() {
        assert_eq!(tangent_map_rank(&st(&[1])).unwrap(), 2);
        assert_eq!(tangent_map_rank(&st(&[1, 1, 3])).unwrap(), 10);
        assert_eq!(tangent_map_rank(&st(&[2, 2, 2])).unwrap(), 12);
    }

    // Jacobi: d det N = sum over entries of dN_rc times the cofactor of N(0).
    // Entries are affine in each parameter, so dN_rc is its coefficient.
    fn jacobi_tangent(e: &Staircase) -> Vec<Vec<Rational>> {
        let m = spread_out(e);
        let plane = VariableSet::plane();
        let zero = m.specialize(&Assignment::new()).unwrap();
        let t = e.t();
        let mut rows = Vec::new();
        for p in m.registry() {
            let ones = HashMap::from([(p.var(), Rational::one())]);
            let mut row = Vec::new();
            for drop in 0..=t {
                let mut deriv = Polynomial::zero(&plane);
                let kept: Vec<usize> = (0..=t).filter(|&r| r != drop).collect();
                for (r, &src) in kept.iter().enumerate() {
                    for c in 0..t {
                        let entry = m.matrix().get(src, c);
                        let only_p: HashMap<Var, Rational> = m
                            .registry()
                            .iter()
                            .filter(|q| q.tag != p.tag)
                            .map(|q| (q.var(), Rational::zero()))
                            .collect();
                        let entry = entry.specialize(&only_p).unwrap();
                        let d = &entry.specialize(&ones).unwrap() - &entry
                            .specialize(&HashMap::from([(p.var(), Rational::zero())]))
                            .unwrap();
                        let d = Polynomial::from_terms(&plane, d.terms().iter().map(|(mono, k)| {
                            let ring = d.ambient();
                            let ix = ring.index_of(Var::X).unwrap();
                            let iy = ring.index_of(Var::Y).unwrap();
                            (Monomial(vec![mono.0[ix], mono.0[iy]]), k.clone())
                        }));
                        if d.is_zero() {
                            continue;
                        }
                        let sub: Vec<Vec<Polynomial>> = kept
                            .iter()
                            .filter(|&&q| q != src)
                            .map(|&q| (0..t).filter(|&k| k != c).map(|k| zero.get(q, k).clone()).collect())
                            .collect();
                        let cof = cofactor_determinant(&PolyMatrix::from_rows(&plane, sub).unwrap());
                        let term = &d * &cof;
                        deriv = if (r + c) % 2 == 0 { &deriv + &term } else { &deriv - &term };
                    }
                }
                row.extend(standard_coordinates(e, &deriv));
            }
            rows.push(row);
        }
        rows
    }

    #[test]
    fn tangent_matrix_matches_jacobi() {
        for e in [st(&[1]), st(&[2, 2]), st(&[1, 1, 3]), st(&[1, 2, 2]), st(&[2, 3])] {
            assert_eq!(tangent_matrix(&e).unwrap(), jacobi_tangent(&e), "m = {e}");
        }
    }

    #[test]
    fn assignment_json_round_trip() {
        let a = Assignment::from_json(r#"{"a[1,2,2]": "-3/4", "a[4,3,5]": 2}"#).unwrap();
        assert_eq!(a.values[&tag(1, 2, 2)], Rational::new((-3).into(), 4.into()));
        assert_eq!(Assignment::from_json(&a.to_json()).unwrap(), a);
        assert!(Assignment::from_json(r#"{"b[1]": "1"}"#).is_err());
        assert!(Assignment::from_json(r#"{"a[1,1,0]": "1/0"}"#).is_err());
    }
}
