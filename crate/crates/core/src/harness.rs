//! Report builders behind the command-line tool, plus seeded sampling of
//! cell points.

use std::fmt::Write as _;

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::cells::{
    cell_restrict, criterion_from_res, degree_matrices, hilbert_burch_matrix, minors_ideal,
    resultant_res_e, spread_out, tangent_map_rank, verify_point, Assignment, CellError,
    CellRestriction, CriterionReport, KeptParam, Mode, ParamIndexJson, ParamSubset, Staircase,
    Theorem, Verdict, VerifyReport,
};
use crate::groebner::{colength, gm_limit, ideal_equal, reduced_groebner, Colength, GroebnerJson, MonomialOrder};
use crate::linalg::MatrixJson;
use crate::poly::{ParamTag, Rational};
use crate::torus::Cocharacter;

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Cell(#[from] CellError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Command {
    Staircase,
    Matrix,
    Resultant,
    Cell,
    Specialize,
    Limit,
    Tangent,
    Verify,
}

#[derive(Clone, Debug)]
pub struct RunConfig {
    pub command: Command,
    pub staircase: Staircase,
    pub cocharacter: Option<Cocharacter>,
    pub restrict: Option<Vec<ParamTag>>,
    pub assignment: Option<Assignment>,
    pub samples: usize,
    pub seed: u64,
    pub format: Format,
    pub pi_minus: bool,
}

impl RunConfig {
    pub fn new(command: Command, staircase: Staircase) -> Self {
        RunConfig {
            command,
            staircase,
            cocharacter: None,
            restrict: None,
            assignment: None,
            samples: 25,
            seed: 0,
            format: Format::Text,
            pi_minus: false,
        }
    }
}

pub fn parse_m(text: &str) -> Result<Staircase, HarnessError> {
    let m = text
        .split(',')
        .map(|s| s.trim().parse::<u32>())
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| HarnessError::Usage(format!("--m `{text}`: {e}")))?;
    Staircase::new(m).map_err(|e| HarnessError::Usage(e.to_string()))
}

pub fn parse_cochar(text: &str) -> Result<Cocharacter, HarnessError> {
    let parts: Vec<&str> = text.split(',').map(str::trim).collect();
    let [a, b] = parts[..] else {
        return Err(HarnessError::Usage(format!("--cochar `{text}`: expected alpha,beta")));
    };
    let parse = |s: &str| s.parse::<i64>().map_err(|e| HarnessError::Usage(format!("--cochar `{text}`: {e}")));
    Cocharacter::new(parse(a)?, parse(b)?).map_err(|e| HarnessError::Usage(e.to_string()))
}

/// Comma-separated `a[i,j,k]` tags; commas inside brackets do not split.
pub fn parse_restrict(text: &str) -> Result<Vec<ParamTag>, HarnessError> {
    let mut out = Vec::new();
    let mut depth = 0;
    let mut start = 0;
    for (pos, c) in text.char_indices().chain(std::iter::once((text.len(), ','))) {
        match c {
            '[' => depth += 1,
            ']' => depth -= 1,
            ',' if depth == 0 => {
                let piece = text[start..pos].trim();
                if !piece.is_empty() {
                    out.push(piece.parse().map_err(|e| HarnessError::Usage(format!("--restrict: {e}")))?);
                }
                start = pos + 1;
            }
            _ => {}
        }
    }
    Ok(out)
}

/// Numerator in `[-10, 10]`, denominator in `[1, 10]`.
pub fn sample_rational<R: Rng>(rng: &mut R) -> Rational {
    let n: i64 = rng.gen_range(-10..=10);
    let d: i64 = rng.gen_range(1..=10);
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// `count` assignments on `tags`, all drawn from one stream seeded by `seed`.
/// With no tags there is only the zero assignment.
pub fn sample_assignments(tags: &[ParamTag], count: usize, seed: u64) -> Vec<Assignment> {
    if tags.is_empty() {
        return vec![Assignment::new()];
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| Assignment {
            values: tags.iter().map(|t| (*t, sample_rational(&mut rng))).collect(),
        })
        .collect()
}

/// A finished command: what to print and whether it counts as success.
pub trait Report: Serialize {
    fn text(&self) -> String;
    fn success(&self) -> bool {
        true
    }
}

pub fn render<R: Report>(r: &R, format: Format) -> String {
    match format {
        Format::Json => serde_json::to_string_pretty(r).expect("reports serialize") + "\n",
        Format::Text => r.text(),
    }
}

fn grid_text(out: &mut String, name: &str, g: &[Vec<i64>]) {
    let _ = writeln!(out, "{name}:");
    for row in g {
        let cells: Vec<String> = row.iter().map(|v| format!("{v:>4}")).collect();
        let _ = writeln!(out, "  {}", cells.join(""));
    }
}

fn matrix_text(out: &mut String, name: &str, m: &MatrixJson) {
    let _ = writeln!(out, "{name}:");
    for row in &m.entries {
        let _ = writeln!(out, "  [ {} ]", row.join(" | "));
    }
}

#[derive(Serialize)]
pub struct StaircaseReport {
    pub m: Vec<u32>,
    pub t: usize,
    pub d: u32,
    pub d_i: Vec<u32>,
    pub generators: Vec<String>,
    pub u_x: Vec<Vec<i64>>,
    pub u_y: Vec<Vec<i64>>,
    pub parameters: Vec<ParamIndexJson>,
}

impl Report for StaircaseReport {
    fn text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "m = {:?}", self.m);
        let _ = writeln!(s, "t = {}", self.t);
        let _ = writeln!(s, "d = {}", self.d);
        let _ = writeln!(s, "d_i = {:?}", self.d_i);
        let _ = writeln!(s, "E = ({})", self.generators.join(", "));
        grid_text(&mut s, "U_x", &self.u_x);
        grid_text(&mut s, "U_y", &self.u_y);
        let _ = writeln!(s, "parameters ({}):", self.parameters.len());
        for p in &self.parameters {
            let _ = writeln!(s, "  {}  weight ({}, {})", p.tag, p.weight.0, p.weight.1);
        }
        s
    }
}

pub fn cmd_staircase(cfg: &RunConfig) -> StaircaseReport {
    let e = &cfg.staircase;
    let (u_x, u_y) = degree_matrices(e);
    let m = spread_out(e);
    StaircaseReport {
        m: e.m().to_vec(),
        t: e.t(),
        d: e.colength(),
        d_i: e.diffs(),
        generators: e.ideal().to_strings(),
        u_x,
        u_y,
        parameters: m.registry().iter().map(|p| (*p).into()).collect(),
    }
}

fn subset_of<'a>(cfg: &'a RunConfig, cell: Option<&'a CellRestriction>) -> ParamSubset<'a> {
    match (&cfg.restrict, cell) {
        (Some(tags), _) => ParamSubset::Only(tags),
        (None, Some(c)) => ParamSubset::Cell(c),
        (None, None) => ParamSubset::All,
    }
}

#[derive(Serialize)]
pub struct MatrixReport {
    pub m: Vec<u32>,
    pub hilbert_burch: MatrixJson,
    pub spread_out: MatrixJson,
}

impl Report for MatrixReport {
    fn text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "m = {:?}", self.m);
        matrix_text(&mut s, "Hilbert-Burch matrix", &self.hilbert_burch);
        matrix_text(&mut s, "spread-out matrix", &self.spread_out);
        s
    }
}

pub fn cmd_matrix(cfg: &RunConfig) -> Result<MatrixReport, HarnessError> {
    let m = spread_out(&cfg.staircase);
    let cell = cfg.cocharacter.map(|psi| cell_restrict(&m, psi));
    let restricted = m.restricted(&subset_of(cfg, cell.as_ref()))?;
    Ok(MatrixReport {
        m: cfg.staircase.m().to_vec(),
        hilbert_burch: hilbert_burch_matrix(&cfg.staircase).to_json(),
        spread_out: restricted.to_json(),
    })
}

#[derive(Serialize)]
pub struct ResultantReport {
    pub m: Vec<u32>,
    pub parameters: Vec<String>,
    pub criterion: CriterionReport,
}

fn criterion_text(s: &mut String, c: &CriterionReport) {
    let _ = writeln!(s, "res_E = {}", c.res);
    match c.deg_y {
        Some(d) => {
            let _ = writeln!(s, "deg_y = {d}");
        }
        None => {
            let _ = writeln!(s, "deg_y = -inf");
        }
    }
    let _ = writeln!(s, "t*m_t = {}", c.target);
    let _ = writeln!(s, "top coefficient = {}", c.top_coefficient);
    let _ = writeln!(s, "coefficient of y^{} = {}", c.target, c.u);
    let _ = writeln!(s, "flat locus nonempty: {}", c.flat_locus_nonempty);
    let verdict = match c.deg_y {
        Some(d) if d == c.target => "degree equals t*m_t: finite and flat where the top coefficient is a unit",
        Some(d) if d > c.target => "degree exceeds t*m_t generically: criterion fails off the vanishing locus of the top coefficient",
        _ => "degree below t*m_t",
    };
    let _ = writeln!(s, "finiteness degree met: {} ({verdict})", c.finiteness_degree_met);
    let _ = writeln!(s, "theorem applied: {}", theorem_name(c.theorem_applied));
    let _ = writeln!(s, "isomorphism onto cell: {}", verdict_name(c.isomorphism_onto_cell));
}

fn theorem_name(t: Theorem) -> &'static str {
    match t {
        Theorem::Abb => "abb",
        Theorem::AbbMinus => "abb-minus",
        Theorem::None => "none",
    }
}

fn verdict_name(v: Verdict) -> &'static str {
    match v {
        Verdict::Yes => "yes",
        Verdict::No => "no",
        Verdict::Unknown => "unknown",
    }
}

impl Report for ResultantReport {
    fn text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "m = {:?}", self.m);
        let _ = writeln!(s, "parameters: {}", self.parameters.join(", "));
        criterion_text(&mut s, &self.criterion);
        s
    }
}

pub fn cmd_resultant(cfg: &RunConfig) -> Result<ResultantReport, HarnessError> {
    let m = spread_out(&cfg.staircase);
    let cell = cfg.cocharacter.map(|psi| cell_restrict(&m, psi));
    let subset = subset_of(cfg, cell.as_ref());
    let parameters = match &subset {
        ParamSubset::All => m.registry().iter().map(|p| p.tag.to_string()).collect(),
        ParamSubset::Cell(c) => c.kept_tags().iter().map(ToString::to_string).collect(),
        ParamSubset::Only(tags) => tags.iter().map(ToString::to_string).collect(),
    };
    let res = resultant_res_e(&m, &subset)?;
    let restriction = if cfg.restrict.is_none() { cell.as_ref() } else { None };
    Ok(ResultantReport {
        m: cfg.staircase.m().to_vec(),
        parameters,
        criterion: criterion_from_res(&m, &res, restriction)?,
    })
}

#[derive(Serialize)]
pub struct CellReport {
    pub m: Vec<u32>,
    pub cocharacter: Cocharacter,
    pub kept: Vec<KeptParam>,
    pub isolated_origin: bool,
    pub mode: Mode,
    pub theorem: Theorem,
    pub isomorphism_onto_cell: Verdict,
    /// Weight-zero parameters span the fixed locus through the origin.
    pub fixed_directions: Vec<String>,
}

impl Report for CellReport {
    fn text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "m = {:?}", self.m);
        let _ = writeln!(s, "cocharacter = {}", self.cocharacter);
        let _ = writeln!(s, "kept ({}):", self.kept.len());
        for k in &self.kept {
            let _ = writeln!(
                s,
                "  {}  weight ({}, {})  pairing {}",
                k.param.tag, k.param.weight.0, k.param.weight.1, k.pairing
            );
        }
        let _ = writeln!(s, "isolated origin: {}", self.isolated_origin);
        if !self.fixed_directions.is_empty() {
            let _ = writeln!(s, "pairing zero: {}", self.fixed_directions.join(", "));
        }
        let _ = writeln!(s, "mode: {}", self.mode);
        let _ = writeln!(s, "theorem: {}", theorem_name(self.theorem));
        let _ = writeln!(s, "isomorphism onto cell: {}", verdict_name(self.isomorphism_onto_cell));
        s
    }
}

fn require_cochar(cfg: &RunConfig) -> Result<Cocharacter, HarnessError> {
    cfg.cocharacter
        .ok_or_else(|| HarnessError::Usage("this command needs --cochar alpha,beta".into()))
}

fn require_assignment(cfg: &RunConfig) -> Result<&Assignment, HarnessError> {
    cfg.assignment
        .as_ref()
        .ok_or_else(|| HarnessError::Usage("this command needs --assign <file>".into()))
}

pub fn cmd_cell(cfg: &RunConfig) -> Result<CellReport, HarnessError> {
    let psi = require_cochar(cfg)?;
    let m = spread_out(&cfg.staircase);
    let c = cell_restrict(&m, psi);
    Ok(CellReport {
        m: cfg.staircase.m().to_vec(),
        cocharacter: psi,
        fixed_directions: c.kept.iter().filter(|k| k.pairing == 0).map(|k| k.param.tag.to_string()).collect(),
        isolated_origin: c.isolated_origin,
        mode: c.mode,
        theorem: match c.mode {
            Mode::Plus => Theorem::Abb,
            Mode::Minus => Theorem::AbbMinus,
        },
        isomorphism_onto_cell: if c.isolated_origin { Verdict::Yes } else { Verdict::Unknown },
        kept: c.kept,
    })
}

#[derive(Serialize)]
pub struct SpecializeReport {
    pub m: Vec<u32>,
    pub assignment: std::collections::BTreeMap<String, String>,
    pub mode: Mode,
    pub generators: Vec<String>,
    pub groebner: GroebnerJson,
    pub colength: Colength,
    pub expected_colength: u32,
}

impl Report for SpecializeReport {
    fn text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "m = {:?}", self.m);
        for (k, v) in &self.assignment {
            let _ = writeln!(s, "{k} = {v}");
        }
        let _ = writeln!(s, "mode: {}", self.mode);
        let _ = writeln!(s, "minors: ({})", self.generators.join(", "));
        let _ = writeln!(s, "{} basis: ({})", self.groebner.order, self.groebner.basis.join(", "));
        let _ = writeln!(s, "colength = {} (d = {})", self.colength, self.expected_colength);
        s
    }
}

fn mode_for(cfg: &RunConfig) -> Mode {
    if cfg.pi_minus {
        Mode::Minus
    } else {
        Mode::Plus
    }
}

pub fn cmd_specialize(cfg: &RunConfig) -> Result<SpecializeReport, HarnessError> {
    let a = require_assignment(cfg)?;
    let m = spread_out(&cfg.staircase);
    let mode = mode_for(cfg);
    let ideal = minors_ideal(&m, a, mode)?;
    let gb = reduced_groebner(&ideal, &MonomialOrder::deglex(2));
    Ok(SpecializeReport {
        m: cfg.staircase.m().to_vec(),
        assignment: a.to_json_map(),
        mode,
        generators: ideal.to_strings(),
        groebner: gb.to_json(),
        colength: colength(&ideal),
        expected_colength: cfg.staircase.colength(),
    })
}

#[derive(Serialize)]
pub struct LimitReport {
    pub m: Vec<u32>,
    pub cocharacter: Cocharacter,
    pub mode: Mode,
    pub generators: Vec<String>,
    pub colength: Colength,
    pub limit: Option<Vec<String>>,
    pub limit_is_e: Option<bool>,
}

impl Report for LimitReport {
    fn text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "m = {:?}", self.m);
        let _ = writeln!(s, "cocharacter = {}", self.cocharacter);
        let _ = writeln!(s, "mode: {}", self.mode);
        let _ = writeln!(s, "ideal: ({})", self.generators.join(", "));
        let _ = writeln!(s, "colength = {}", self.colength);
        match (&self.limit, self.limit_is_e) {
            (Some(l), Some(is_e)) => {
                let _ = writeln!(s, "limit: ({})", l.join(", "));
                let _ = writeln!(s, "limit equals E: {is_e}");
            }
            _ => {
                let _ = writeln!(s, "limit: undefined (infinite colength)");
            }
        }
        s
    }
}

pub fn cmd_limit(cfg: &RunConfig) -> Result<LimitReport, HarnessError> {
    let psi = require_cochar(cfg)?;
    let empty = Assignment::new();
    let a = cfg.assignment.as_ref().unwrap_or(&empty);
    let m = spread_out(&cfg.staircase);
    let mode = mode_for(cfg);
    let ideal = minors_ideal(&m, a, mode)?;
    let col = colength(&ideal);
    let (limit, limit_is_e) = match col {
        Colength::Infinite => (None, None),
        Colength::Finite(_) => {
            let lim = gm_limit(&ideal, &psi).map_err(CellError::from)?;
            let is_e = ideal_equal(&lim, &cfg.staircase.ideal()).map_err(CellError::from)?;
            (Some(lim.to_strings()), Some(is_e))
        }
    };
    Ok(LimitReport {
        m: cfg.staircase.m().to_vec(),
        cocharacter: psi,
        mode,
        generators: ideal.to_strings(),
        colength: col,
        limit,
        limit_is_e,
    })
}

#[derive(Serialize)]
pub struct TangentReport {
    pub m: Vec<u32>,
    pub rank: usize,
    pub expected: u32,
}

impl Report for TangentReport {
    fn text(&self) -> String {
        let rel = if self.rank == self.expected as usize { "=" } else { "!=" };
        format!("m = {:?}\nrank {} {rel} 2d = {}\n", self.m, self.rank, self.expected)
    }

    fn success(&self) -> bool {
        self.rank == self.expected as usize
    }
}

pub fn cmd_tangent(cfg: &RunConfig) -> Result<TangentReport, HarnessError> {
    Ok(TangentReport {
        m: cfg.staircase.m().to_vec(),
        rank: tangent_map_rank(&cfg.staircase)?,
        expected: 2 * cfg.staircase.colength(),
    })
}

#[derive(Serialize)]
pub struct SampleOutcome {
    pub index: usize,
    pub assignment: std::collections::BTreeMap<String, String>,
    pub colength: Colength,
    pub colength_ok: bool,
    pub limit_ok: Option<bool>,
    pub passed: bool,
}

#[derive(Serialize)]
pub struct VerifyRunReport {
    pub m: Vec<u32>,
    pub cocharacter: Cocharacter,
    pub seed: u64,
    pub mode: Mode,
    pub isolated_origin: bool,
    pub kept: Vec<String>,
    /// True when the kept set is empty and only the origin was checked.
    pub degenerate: bool,
    pub samples: Vec<SampleOutcome>,
    pub passed: usize,
    pub total: usize,
}

impl Report for VerifyRunReport {
    fn text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "m = {:?}", self.m);
        let _ = writeln!(s, "cocharacter = {}  seed = {}", self.cocharacter, self.seed);
        let _ = writeln!(s, "mode: {}  isolated origin: {}", self.mode, self.isolated_origin);
        if self.degenerate {
            let _ = writeln!(s, "kept: none, only the zero assignment is checked");
        } else {
            let _ = writeln!(s, "kept: {}", self.kept.join(", "));
        }
        for o in &self.samples {
            let limit = match o.limit_ok {
                Some(true) => "limit = E",
                Some(false) => "limit != E",
                None => "no limit",
            };
            let verdict = if o.passed { "ok" } else { "FAIL" };
            let _ = writeln!(s, "  #{:<3} colength {:<8} {limit:<10} {verdict}", o.index, o.colength.to_string());
        }
        let _ = writeln!(s, "{}/{} pass", self.passed, self.total);
        s
    }

    /// Failures only count against a cell with an isolated fixed point.
    fn success(&self) -> bool {
        !self.isolated_origin || self.passed == self.total
    }
}

pub fn cmd_verify(cfg: &RunConfig) -> Result<VerifyRunReport, HarnessError> {
    let psi = require_cochar(cfg)?;
    if cfg.samples == 0 {
        return Err(HarnessError::Usage("--samples must be at least 1".into()));
    }
    let m = spread_out(&cfg.staircase);
    let mut cell = cell_restrict(&m, psi);
    if cfg.pi_minus {
        cell.mode = Mode::Minus;
    }
    let tags = cell.kept_tags();
    let draws = sample_assignments(&tags, cfg.samples, cfg.seed);
    let outcomes: Vec<Result<(usize, Assignment, VerifyReport), CellError>> = draws
        .into_par_iter()
        .enumerate()
        .map(|(i, a)| verify_point(&m, Some(&cell), &a).map(|r| (i, a, r)))
        .collect();
    let mut samples = Vec::with_capacity(outcomes.len());
    for o in outcomes {
        let (index, a, r) = o?;
        samples.push(SampleOutcome {
            index,
            assignment: a.to_json_map(),
            colength: r.colength,
            colength_ok: r.colength_ok,
            limit_ok: r.limit_ok,
            passed: r.passed(),
        });
    }
    let passed = samples.iter().filter(|s| s.passed).count();
    Ok(VerifyRunReport {
        m: cfg.staircase.m().to_vec(),
        cocharacter: psi,
        seed: cfg.seed,
        mode: cell.mode,
        isolated_origin: cell.isolated_origin,
        kept: tags.iter().map(ToString::to_string).collect(),
        degenerate: tags.is_empty(),
        total: samples.len(),
        samples,
        passed,
    })
}

/// Runs the configured command and returns its rendering and success flag.
pub fn run(cfg: &RunConfig) -> Result<(String, bool), HarnessError> {
    fn done<R: Report>(r: R, f: Format) -> (String, bool) {
        (render(&r, f), r.success())
    }
    let f = cfg.format;
    Ok(match cfg.command {
        Command::Staircase => done(cmd_staircase(cfg), f),
        Command::Matrix => done(cmd_matrix(cfg)?, f),
        Command::Resultant => done(cmd_resultant(cfg)?, f),
        Command::Cell => done(cmd_cell(cfg)?, f),
        Command::Specialize => done(cmd_specialize(cfg)?, f),
        Command::Limit => done(cmd_limit(cfg)?, f),
        Command::Tangent => done(cmd_tangent(cfg)?, f),
        Command::Verify => done(cmd_verify(cfg)?, f),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn restrict_lists_split_outside_brackets() {
        let tags = parse_restrict("a[1,2,2], a[2,1,2]").unwrap();
        assert_eq!(tags, vec![ParamTag::new(1, 2, 2), ParamTag::new(2, 1, 2)]);
        assert!(parse_restrict("a[1,2]").is_err());
        assert!(parse_restrict("").unwrap().is_empty());
    }

    #[test]
    fn bad_inputs_are_usage_errors() {
        assert!(matches!(parse_m("3,1"), Err(HarnessError::Usage(_))));
        assert!(matches!(parse_m("1,x"), Err(HarnessError::Usage(_))));
        assert!(matches!(parse_cochar("0,0"), Err(HarnessError::Usage(_))));
        assert!(matches!(parse_cochar("1"), Err(HarnessError::Usage(_))));
        assert_eq!(parse_cochar("-3,2").unwrap(), Cocharacter::new(-3, 2).unwrap());
    }

    #[test]
    fn sampling_is_seeded_and_bounded() {
        let tags = [ParamTag::new(1, 1, 0), ParamTag::new(2, 1, 0)];
        let a = sample_assignments(&tags, 50, 7);
        assert_eq!(a, sample_assignments(&tags, 50, 7));
        assert_ne!(a, sample_assignments(&tags, 50, 8));
        let ten = BigInt::from(10);
        for v in a.iter().flat_map(|x| x.values.values()) {
            assert!(v.numer().magnitude() <= ten.magnitude());
            assert!(v.denom() <= &ten);
        }
        assert_eq!(sample_assignments(&[], 25, 1), vec![Assignment::new()]);
    }
}
