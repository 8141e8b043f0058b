//! Sparse multivariate polynomials with exact rational coefficients.
//!
//! Every polynomial lives over an ordered [`VariableSet`] fixed at ring
//! creation. Terms are stored in graded-lexicographic descending order with
//! no zero coefficients, so derived `PartialEq` is mathematical equality.

mod parse;

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

pub use parse::parse_rational;

/// Ground field element. Always reduced, denominator positive.
pub type Rational = BigRational;

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("polynomials live over different variable sets")]
    AmbientMismatch,
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("division is not exact")]
    NotExact,
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("duplicate variable `{0}` in variable set")]
    DuplicateVariable(String),
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}

/// Tag of a deformation parameter `a[i,j,k]`: matrix row `i`, column `j`,
/// coefficient of `y^k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ParamTag {
    pub i: u32,
    pub j: u32,
    pub k: u32,
}

impl ParamTag {
    pub fn new(i: u32, j: u32, k: u32) -> Self {
        ParamTag { i, j, k }
    }
}

impl fmt::Display for ParamTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "a[{},{},{}]", self.i, self.j, self.k)
    }
}

impl std::str::FromStr for ParamTag {
    type Err = PolyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || PolyError::UnknownVariable(s.to_string());
        let inner = s
            .trim()
            .strip_prefix("a[")
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(bad)?;
        let parts: Vec<u32> = inner
            .split(',')
            .map(|p| p.trim().parse::<u32>())
            .collect::<Result<_, _>>()
            .map_err(|_| bad())?;
        match parts.as_slice() {
            [i, j, k] => Ok(ParamTag::new(*i, *j, *k)),
            _ => Err(bad()),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    X,
    Y,
    T,
    U,
    Param(ParamTag),
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Var::X => f.write_str("x"),
            Var::Y => f.write_str("y"),
            Var::T => f.write_str("t"),
            Var::U => f.write_str("u"),
            Var::Param(p) => p.fmt(f),
        }
    }
}

/// Ordered, duplicate-free list of ring variables.
#[derive(Debug, PartialEq, Eq)]
pub struct VariableSet {
    vars: Vec<Var>,
    index: HashMap<Var, usize>,
}

impl VariableSet {
    pub fn new(vars: Vec<Var>) -> Result<Arc<Self>, PolyError> {
        let mut index = HashMap::with_capacity(vars.len());
        for (n, v) in vars.iter().enumerate() {
            if index.insert(*v, n).is_some() {
                return Err(PolyError::DuplicateVariable(v.to_string()));
            }
        }
        Ok(Arc::new(VariableSet { vars, index }))
    }

    /// `Q[x, y]`.
    pub fn plane() -> Arc<Self> {
        Self::new(vec![Var::X, Var::Y]).expect("distinct")
    }

    /// The ring used for one staircase: x, y, t, u, then parameters sorted.
    pub fn with_params(params: impl IntoIterator<Item = ParamTag>) -> Arc<Self> {
        let mut ps: Vec<ParamTag> = params.into_iter().collect();
        ps.sort();
        ps.dedup();
        let mut vars = vec![Var::X, Var::Y, Var::T, Var::U];
        vars.extend(ps.into_iter().map(Var::Param));
        Self::new(vars).expect("distinct")
    }

    pub fn len(&self) -> usize {
        self.vars.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vars.is_empty()
    }

    pub fn vars(&self) -> &[Var] {
        &self.vars
    }

    pub fn index_of(&self, v: Var) -> Option<usize> {
        self.index.get(&v).copied()
    }

    pub fn require(&self, v: Var) -> Result<usize, PolyError> {
        self.index_of(v)
            .ok_or_else(|| PolyError::UnknownVariable(v.to_string()))
    }
}

/// Exponent vector, one entry per ambient variable.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn one(n: usize) -> Self {
        Monomial(vec![0; n])
    }

    pub fn var(n: usize, idx: usize, exp: u32) -> Self {
        let mut e = vec![0; n];
        e[idx] = exp;
        Monomial(e)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `other / self`, assuming `self | other`.
    pub fn quotient_of(&self, other: &Monomial) -> Monomial {
        Monomial(other.0.iter().zip(&self.0).map(|(a, b)| a - b).collect())
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }
}

/// Graded lexicographic comparison in the ambient variable order.
#[derive(PartialEq, Eq)]
struct GrlexKey(Monomial);

impl Ord for GrlexKey {
    fn cmp(&self, other: &Self) -> Ordering {
        grlex_cmp(&self.0, &other.0)
    }
}

impl PartialOrd for GrlexKey {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

pub fn grlex_cmp(a: &Monomial, b: &Monomial) -> Ordering {
    a.degree().cmp(&b.degree()).then_with(|| a.0.cmp(&b.0))
}

/// Per-variable Z^2 weight.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightAssignment {
    pub weights: Vec<(i64, i64)>,
}

impl WeightAssignment {
    pub fn new(weights: Vec<(i64, i64)>) -> Self {
        WeightAssignment { weights }
    }

    pub fn of_monomial(&self, m: &Monomial) -> (i64, i64) {
        m.0.iter()
            .zip(&self.weights)
            .fold((0, 0), |(wx, wy), (&e, &(ax, ay))| {
                (wx + e as i64 * ax, wy + e as i64 * ay)
            })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Homogeneity {
    /// The zero polynomial: homogeneous of every weight.
    Any,
    Homogeneous((i64, i64)),
    Inhomogeneous,
}

impl Homogeneity {
    pub fn is_homogeneous(&self) -> bool {
        !matches!(self, Homogeneity::Inhomogeneous)
    }
}

/// Degree in one variable; `MinusInfinity` for the zero polynomial.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Degree {
    MinusInfinity,
    Finite(u32),
}

impl Degree {
    pub fn finite(self) -> Option<u32> {
        match self {
            Degree::Finite(d) => Some(d),
            Degree::MinusInfinity => None,
        }
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::MinusInfinity => f.write_str("-inf"),
            Degree::Finite(d) => write!(f, "{d}"),
        }
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct Polynomial {
    ambient: Arc<VariableSet>,
    terms: Vec<(Monomial, Rational)>,
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

fn same_ambient(a: &Arc<VariableSet>, b: &Arc<VariableSet>) -> bool {
    Arc::ptr_eq(a, b) || a.vars == b.vars
}

impl Polynomial {
    pub fn zero(ambient: &Arc<VariableSet>) -> Self {
        Polynomial { ambient: ambient.clone(), terms: Vec::new() }
    }

    pub fn constant(ambient: &Arc<VariableSet>, c: Rational) -> Self {
        Self::monomial(ambient, Monomial::one(ambient.len()), c)
    }

    pub fn one(ambient: &Arc<VariableSet>) -> Self {
        Self::constant(ambient, Rational::one())
    }

    pub fn monomial(ambient: &Arc<VariableSet>, m: Monomial, c: Rational) -> Self {
        debug_assert_eq!(m.0.len(), ambient.len());
        let terms = if c.is_zero() { Vec::new() } else { vec![(m, c)] };
        Polynomial { ambient: ambient.clone(), terms }
    }

    pub fn var(ambient: &Arc<VariableSet>, v: Var) -> Result<Self, PolyError> {
        Self::var_pow(ambient, v, 1)
    }

    pub fn var_pow(ambient: &Arc<VariableSet>, v: Var, e: u32) -> Result<Self, PolyError> {
        let idx = ambient.require(v)?;
        Ok(Self::monomial(ambient, Monomial::var(ambient.len(), idx, e), Rational::one()))
    }

    /// Builds a polynomial from arbitrary (possibly repeated, possibly zero) terms.
    pub fn from_terms(
        ambient: &Arc<VariableSet>,
        terms: impl IntoIterator<Item = (Monomial, Rational)>,
    ) -> Self {
        let mut acc: HashMap<Monomial, Rational> = HashMap::new();
        for (m, c) in terms {
            debug_assert_eq!(m.0.len(), ambient.len());
            *acc.entry(m).or_insert_with(Rational::zero) += c;
        }
        Self::from_map(ambient, acc)
    }

    fn from_map(ambient: &Arc<VariableSet>, acc: HashMap<Monomial, Rational>) -> Self {
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_by(|a, b| grlex_cmp(&b.0, &a.0));
        Polynomial { ambient: ambient.clone(), terms }
    }

    pub fn parse(ambient: &Arc<VariableSet>, text: &str) -> Result<Self, PolyError> {
        parse::parse_polynomial(ambient, text)
    }

    pub fn ambient(&self) -> &Arc<VariableSet> {
        &self.ambient
    }

    /// Terms in graded-lex descending order.
    pub fn terms(&self) -> &[(Monomial, Rational)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Value if the polynomial is a constant (including zero).
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.as_slice() {
            [] => Some(Rational::zero()),
            [(m, c)] if m.is_one() => Some(c.clone()),
            _ => None,
        }
    }

    pub fn is_one(&self) -> bool {
        self.as_constant().is_some_and(|c| c.is_one())
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.first().map(|(m, _)| m.degree())
    }

    /// Leading term in graded-lex order.
    pub fn leading_term(&self) -> Option<&(Monomial, Rational)> {
        self.terms.first()
    }

    fn check(&self, other: &Polynomial) -> Result<(), PolyError> {
        if same_ambient(&self.ambient, &other.ambient) {
            Ok(())
        } else {
            Err(PolyError::AmbientMismatch)
        }
    }

    pub fn try_add(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.check(other)?;
        Ok(self.merge(other, false))
    }

    pub fn try_sub(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.check(other)?;
        Ok(self.merge(other, true))
    }

    pub fn try_mul(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.check(other)?;
        Ok(self.mul_unchecked(other))
    }

    pub fn pow(&self, k: u32) -> Polynomial {
        let mut result = Polynomial::one(&self.ambient);
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = result.mul_unchecked(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul_unchecked(&base);
            }
        }
        result
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ambient);
        }
        Polynomial {
            ambient: self.ambient.clone(),
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ambient);
        }
        // multiplying by a monomial preserves grlex order
        Polynomial {
            ambient: self.ambient.clone(),
            terms: self.terms.iter().map(|(n, a)| (n.mul(m), a * c)).collect(),
        }
    }

    fn merge(&self, other: &Polynomial, subtract: bool) -> Polynomial {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        while i < a.len() || j < b.len() {
            let ord = match (a.get(i), b.get(j)) {
                (Some(x), Some(y)) => grlex_cmp(&x.0, &y.0),
                (Some(_), None) => Ordering::Greater,
                _ => Ordering::Less,
            };
            match ord {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    let c = if subtract { -b[j].1.clone() } else { b[j].1.clone() };
                    out.push((b[j].0.clone(), c));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if subtract { &a[i].1 - &b[j].1 } else { &a[i].1 + &b[j].1 };
                    if !c.is_zero() {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        Polynomial { ambient: self.ambient.clone(), terms: out }
    }

    fn mul_unchecked(&self, other: &Polynomial) -> Polynomial {
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero(&self.ambient);
        }
        if self.terms.len() == 1 {
            let (m, c) = &self.terms[0];
            return other.mul_monomial(m, c);
        }
        if other.terms.len() == 1 {
            let (m, c) = &other.terms[0];
            return self.mul_monomial(m, c);
        }
        let mut acc: HashMap<Monomial, Rational> =
            HashMap::with_capacity(self.terms.len() * other.terms.len());
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                let prod = c1 * c2;
                match acc.entry(m1.mul(m2)) {
                    std::collections::hash_map::Entry::Occupied(mut e) => *e.get_mut() += prod,
                    std::collections::hash_map::Entry::Vacant(e) => {
                        e.insert(prod);
                    }
                }
            }
        }
        Self::from_map(&self.ambient, acc)
    }

    /// Simultaneous substitution `v ↦ bindings[v]`; unbound variables pass through.
    pub fn substitute(&self, bindings: &HashMap<Var, Polynomial>) -> Result<Polynomial, PolyError> {
        let mut slots: Vec<Option<&Polynomial>> = vec![None; self.ambient.len()];
        for (v, p) in bindings {
            self.check(p)?;
            slots[self.ambient.require(*v)?] = Some(p);
        }
        if slots.iter().all(Option::is_none) {
            return Ok(self.clone());
        }
        // cache powers per variable
        let mut powers: Vec<Vec<Polynomial>> = vec![Vec::new(); slots.len()];
        let mut acc: HashMap<Monomial, Rational> = HashMap::new();
        for (m, c) in &self.terms {
            let mut kept = m.clone();
            let mut factor = Polynomial::constant(&self.ambient, c.clone());
            for (idx, slot) in slots.iter().enumerate() {
                let e = m.0[idx];
                if e == 0 {
                    continue;
                }
                if let Some(val) = slot {
                    kept.0[idx] = 0;
                    let cache = &mut powers[idx];
                    if cache.is_empty() {
                        cache.push(Polynomial::one(&self.ambient));
                    }
                    while cache.len() <= e as usize {
                        let next = cache.last().unwrap().mul_unchecked(val);
                        cache.push(next);
                    }
                    factor = factor.mul_unchecked(&cache[e as usize]);
                }
            }
            for (fm, fc) in factor.terms {
                *acc.entry(fm.mul(&kept)).or_insert_with(Rational::zero) += fc;
            }
        }
        Ok(Self::from_map(&self.ambient, acc))
    }

    /// Substitutes rational values for variables.
    pub fn specialize(&self, values: &HashMap<Var, Rational>) -> Result<Polynomial, PolyError> {
        let bindings = values
            .iter()
            .map(|(v, c)| (*v, Polynomial::constant(&self.ambient, c.clone())))
            .collect();
        self.substitute(&bindings)
    }

    pub fn partial_derivative(&self, v: Var) -> Result<Polynomial, PolyError> {
        let idx = self.ambient.require(v)?;
        let terms = self.terms.iter().filter(|(m, _)| m.0[idx] > 0).map(|(m, c)| {
            let e = m.0[idx];
            let mut dm = m.clone();
            dm.0[idx] -= 1;
            (dm, c * Rational::from_integer(BigInt::from(e)))
        });
        Ok(Self::from_terms(&self.ambient, terms))
    }

    /// Degree in `v` and the coefficient of each power of `v`.
    pub fn degree_and_coeff(
        &self,
        v: Var,
    ) -> Result<(Degree, BTreeMap<u32, Polynomial>), PolyError> {
        let idx = self.ambient.require(v)?;
        let mut buckets: BTreeMap<u32, Vec<(Monomial, Rational)>> = BTreeMap::new();
        for (m, c) in &self.terms {
            let mut rest = m.clone();
            let e = std::mem::replace(&mut rest.0[idx], 0);
            buckets.entry(e).or_default().push((rest, c.clone()));
        }
        let deg = buckets.keys().next_back().map_or(Degree::MinusInfinity, |&d| Degree::Finite(d));
        let coeffs = buckets
            .into_iter()
            .map(|(e, ts)| (e, Self::from_terms(&self.ambient, ts)))
            .collect();
        Ok((deg, coeffs))
    }

    pub fn degree_in(&self, v: Var) -> Result<Degree, PolyError> {
        let idx = self.ambient.require(v)?;
        Ok(self
            .terms
            .iter()
            .map(|(m, _)| m.0[idx])
            .max()
            .map_or(Degree::MinusInfinity, Degree::Finite))
    }

    /// `self / q` when `q` divides `self`; otherwise [`PolyError::NotExact`].
    pub fn exact_divide(&self, q: &Polynomial) -> Result<Polynomial, PolyError> {
        self.check(q)?;
        let (lm, lc) = q.leading_term().ok_or(PolyError::DivisionByZero)?;
        if q.terms.len() == 1 {
            let mut out = Vec::with_capacity(self.terms.len());
            for (m, c) in &self.terms {
                if !lm.divides(m) {
                    return Err(PolyError::NotExact);
                }
                out.push((lm.quotient_of(m), c / lc));
            }
            return Ok(Polynomial { ambient: self.ambient.clone(), terms: out });
        }
        // remainder kept in a grlex-ordered map so each step costs |q| log |rem|
        let mut rem: BTreeMap<GrlexKey, Rational> =
            self.terms.iter().map(|(m, c)| (GrlexKey(m.clone()), c.clone())).collect();
        let mut quot = Vec::new();
        while let Some((GrlexKey(m), c)) = rem.pop_last() {
            if !lm.divides(&m) {
                return Err(PolyError::NotExact);
            }
            let qm = lm.quotient_of(&m);
            let qc = &c / lc;
            for (tm, tc) in &q.terms[1..] {
                let key = GrlexKey(tm.mul(&qm));
                let delta = tc * &qc;
                match rem.entry(key) {
                    std::collections::btree_map::Entry::Occupied(mut e) => {
                        *e.get_mut() -= delta;
                        if e.get().is_zero() {
                            e.remove();
                        }
                    }
                    std::collections::btree_map::Entry::Vacant(e) => {
                        e.insert(-delta);
                    }
                }
            }
            quot.push((qm, qc));
        }
        Ok(Polynomial { ambient: self.ambient.clone(), terms: quot })
    }

    pub fn weight_check(&self, w: &WeightAssignment) -> Homogeneity {
        let mut it = self.terms.iter().map(|(m, _)| w.of_monomial(m));
        match it.next() {
            None => Homogeneity::Any,
            Some(first) => {
                if it.all(|x| x == first) {
                    Homogeneity::Homogeneous(first)
                } else {
                    Homogeneity::Inhomogeneous
                }
            }
        }
    }

    /// Re-expresses the polynomial over another variable set. Fails if a
    /// variable with a nonzero exponent is missing from the target.
    pub fn to_ambient(&self, target: &Arc<VariableSet>) -> Result<Polynomial, PolyError> {
        if same_ambient(&self.ambient, target) {
            return Ok(Polynomial { ambient: target.clone(), terms: self.terms.clone() });
        }
        let map: Vec<Option<usize>> =
            self.ambient.vars.iter().map(|v| target.index_of(*v)).collect();
        let terms = self.terms.iter().map(|(m, c)| {
            let mut e = vec![0; target.len()];
            for (src, &exp) in m.0.iter().enumerate() {
                if exp == 0 {
                    continue;
                }
                match map[src] {
                    Some(dst) => e[dst] = exp,
                    None => {
                        return Err(PolyError::UnknownVariable(self.ambient.vars[src].to_string()))
                    }
                }
            }
            Ok((Monomial(e), c.clone()))
        });
        let terms: Vec<_> = terms.collect::<Result<_, _>>()?;
        Ok(Self::from_terms(target, terms))
    }

    /// Variables with a nonzero exponent somewhere in the polynomial.
    pub fn support_vars(&self) -> Vec<Var> {
        (0..self.ambient.len())
            .filter(|&i| self.terms.iter().any(|(m, _)| m.0[i] > 0))
            .map(|i| self.ambient.vars[i])
            .collect()
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial {
            ambient: self.ambient.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect(),
        }
    }

    /// Divides by the leading coefficient (no-op on zero).
    pub fn monic(&self) -> Polynomial {
        match self.terms.first() {
            Some((_, c)) if !c.is_one() => self.scale(&c.recip()),
            _ => self.clone(),
        }
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $inner:ident) => {
        impl std::ops::$tr<&Polynomial> for &Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                self.$inner(rhs).expect("ambient mismatch")
            }
        }
        impl std::ops::$tr<Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$inner(&rhs).expect("ambient mismatch")
            }
        }
    };
}

forward_binop!(Add, add, try_add);
forward_binop!(Sub, sub, try_sub);
forward_binop!(Mul, mul, try_mul);

impl std::ops::Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial::neg(self)
    }
}

impl std::ops::Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial::neg(&self)
    }
}

pub fn format_rational(c: &Rational) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

fn format_monomial(ambient: &VariableSet, m: &Monomial) -> String {
    let mut parts = Vec::new();
    for (v, &e) in ambient.vars.iter().zip(&m.0) {
        match e {
            0 => {}
            1 => parts.push(v.to_string()),
            _ => parts.push(format!("{v}^{e}")),
        }
    }
    parts.join("*")
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (n, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            match (n, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if m.is_one() {
                f.write_str(&format_rational(&abs))?;
            } else if abs.is_one() {
                f.write_str(&format_monomial(&self.ambient, m))?;
            } else {
                write!(f, "{}*{}", format_rational(&abs), format_monomial(&self.ambient, m))?;
            }
        }
        Ok(())
    }
}
