//! Matrices over the polynomial ring: determinants, maximal minors and
//! Sylvester resultants.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::poly::{Homogeneity, PolyError, Polynomial, Rational, Var, VariableSet, WeightAssignment};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinalgError {
    #[error("shape error: {0}")]
    Shape(String),
    #[error("degenerate resultant: {0}")]
    DegenerateResultant(String),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMatrix {
    rows: usize,
    cols: usize,
    ambient: Arc<VariableSet>,
    entries: Vec<Polynomial>,
}

/// Structured JSON form of a matrix.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixJson {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<Vec<String>>,
}

impl PolyMatrix {
    pub fn zeros(ambient: &Arc<VariableSet>, rows: usize, cols: usize) -> Self {
        PolyMatrix {
            rows,
            cols,
            ambient: ambient.clone(),
            entries: vec![Polynomial::zero(ambient); rows * cols],
        }
    }

    pub fn from_rows(
        ambient: &Arc<VariableSet>,
        rows: Vec<Vec<Polynomial>>,
    ) -> Result<Self, LinalgError> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(LinalgError::Shape("ragged rows".into()));
        }
        let mut entries = Vec::with_capacity(r * c);
        for p in rows.into_iter().flatten() {
            entries.push(p.to_ambient(ambient)?);
        }
        Ok(PolyMatrix { rows: r, cols: c, ambient: ambient.clone(), entries })
    }

    pub fn identity(ambient: &Arc<VariableSet>, n: usize) -> Self {
        let mut m = Self::zeros(ambient, n, n);
        for i in 0..n {
            m.set(i, i, Polynomial::one(ambient));
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn ambient(&self) -> &Arc<VariableSet> {
        &self.ambient
    }

    /// 0-based access.
    pub fn get(&self, r: usize, c: usize) -> &Polynomial {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, p: Polynomial) {
        debug_assert!(Arc::ptr_eq(p.ambient(), &self.ambient) || p.ambient() == &self.ambient);
        self.entries[r * self.cols + c] = p;
    }

    pub fn row(&self, r: usize) -> &[Polynomial] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn map(&self, f: impl Fn(&Polynomial) -> Result<Polynomial, PolyError>) -> Result<Self, LinalgError> {
        let entries = self.entries.iter().map(f).collect::<Result<Vec<_>, _>>()?;
        Ok(PolyMatrix { entries, ..self.clone() })
    }

    pub fn without_row(&self, skip: usize) -> PolyMatrix {
        let entries = (0..self.rows)
            .filter(|&r| r != skip)
            .flat_map(|r| self.row(r).iter().cloned())
            .collect();
        PolyMatrix { rows: self.rows - 1, cols: self.cols, ambient: self.ambient.clone(), entries }
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.entries.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    pub fn to_json(&self) -> MatrixJson {
        MatrixJson {
            rows: self.rows,
            cols: self.cols,
            entries: (0..self.rows)
                .map(|r| self.row(r).iter().map(ToString::to_string).collect())
                .collect(),
        }
    }

    pub fn from_json(ambient: &Arc<VariableSet>, json: &MatrixJson) -> Result<Self, LinalgError> {
        if json.entries.len() != json.rows || json.entries.iter().any(|r| r.len() != json.cols) {
            return Err(LinalgError::Shape("declared shape does not match entries".into()));
        }
        let rows = json
            .entries
            .iter()
            .map(|r| r.iter().map(|s| Polynomial::parse(ambient, s)).collect())
            .collect::<Result<Vec<Vec<_>>, _>>()?;
        Self::from_rows(ambient, rows)
    }

    /// Parses the text format: one row per line, entries separated by ` | `.
    pub fn parse(ambient: &Arc<VariableSet>, text: &str) -> Result<Self, LinalgError> {
        let rows = text
            .lines()
            .filter(|l| !l.trim().is_empty())
            .map(|l| l.split('|').map(|s| Polynomial::parse(ambient, s.trim())).collect())
            .collect::<Result<Vec<Vec<_>>, _>>()?;
        Self::from_rows(ambient, rows)
    }
}

impl fmt::Display for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            let line: Vec<String> = self.row(r).iter().map(ToString::to_string).collect();
            writeln!(f, "{}", line.join(" | "))?;
        }
        Ok(())
    }
}

/// Exact determinant. Cofactor expansion up to 4x4, Bareiss beyond.
pub fn determinant(m: &PolyMatrix) -> Result<Polynomial, LinalgError> {
    if m.rows != m.cols {
        return Err(LinalgError::Shape(format!("{}x{} is not square", m.rows, m.cols)));
    }
    if m.rows <= 4 {
        Ok(cofactor_determinant(m))
    } else if m.rows <= 12 {
        Ok(minor_expansion_determinant(m))
    } else {
        bareiss_determinant(m)
    }
}

/// Division-free Laplace expansion that shares sub-minors: bottom rows
/// against every column subset, one level at a time. `O(2^n n)` products.
pub fn minor_expansion_determinant(m: &PolyMatrix) -> Polynomial {
    let n = m.rows;
    let mut level: HashMap<u32, Polynomial> = HashMap::from([(0u32, Polynomial::one(&m.ambient))]);
    for r in (0..n).rev() {
        let mut next: HashMap<u32, Polynomial> = HashMap::new();
        for (&mask, sub) in &level {
            if sub.is_zero() {
                continue;
            }
            for c in (0..n).filter(|c| mask & (1 << c) == 0) {
                let entry = m.get(r, c);
                if entry.is_zero() {
                    continue;
                }
                // position of c among the columns of the enlarged set
                let pos = (mask & ((1u32 << c) - 1)).count_ones();
                let term = entry * sub;
                let slot = next.entry(mask | (1 << c)).or_insert_with(|| Polynomial::zero(&m.ambient));
                *slot = if pos.is_multiple_of(2) { &*slot + &term } else { &*slot - &term };
            }
        }
        level = next;
    }
    level.remove(&((1u32 << n) - 1)).unwrap_or_else(|| Polynomial::zero(&m.ambient))
}

/// Laplace expansion along the first row. Exponential; small matrices only.
pub fn cofactor_determinant(m: &PolyMatrix) -> Polynomial {
    fn go(m: &PolyMatrix, rows: &[usize], cols: &mut Vec<usize>) -> Polynomial {
        let Some((&r, rest)) = rows.split_first() else {
            return Polynomial::one(&m.ambient);
        };
        let mut acc = Polynomial::zero(&m.ambient);
        for pos in 0..cols.len() {
            let c = cols[pos];
            let entry = m.get(r, c);
            if entry.is_zero() {
                continue;
            }
            cols.remove(pos);
            let sub = go(m, rest, cols);
            cols.insert(pos, c);
            let term = entry * &sub;
            acc = if pos % 2 == 0 { &acc + &term } else { &acc - &term };
        }
        acc
    }
    let rows: Vec<usize> = (0..m.rows).collect();
    let mut cols: Vec<usize> = (0..m.cols).collect();
    go(m, &rows, &mut cols)
}

/// Fraction-free Gaussian elimination; every division is exact.
pub fn bareiss_determinant(m: &PolyMatrix) -> Result<Polynomial, LinalgError> {
    let n = m.rows;
    if n == 0 {
        return Ok(Polynomial::one(&m.ambient));
    }
    let mut a = m.clone();
    let mut negate = false;
    let mut prev = Polynomial::one(&m.ambient);
    for k in 0..n - 1 {
        if a.get(k, k).is_zero() {
            match (k + 1..n).find(|&r| !a.get(r, k).is_zero()) {
                Some(r) => {
                    a.swap_rows(k, r);
                    negate = !negate;
                }
                None => return Ok(Polynomial::zero(&m.ambient)),
            }
        }
        let pivot = a.get(k, k).clone();
        for i in k + 1..n {
            let lead = a.get(i, k).clone();
            for j in k + 1..n {
                let num = &(a.get(i, j) * &pivot) - &(&lead * a.get(k, j));
                let val = if prev.is_one() { num } else { num.exact_divide(&prev)? };
                a.set(i, j, val);
            }
            a.set(i, k, Polynomial::zero(&m.ambient));
        }
        prev = pivot;
    }
    let det = a.get(n - 1, n - 1).clone();
    Ok(if negate { -det } else { det })
}

/// Entry `i` is the determinant with row `i` deleted. No sign normalization.
pub fn maximal_minors(m: &PolyMatrix) -> Result<Vec<Polynomial>, LinalgError> {
    if m.rows != m.cols + 1 {
        return Err(LinalgError::Shape(format!(
            "maximal minors need (t+1) x t, got {}x{}",
            m.rows, m.cols
        )));
    }
    (0..m.rows).map(|r| determinant(&m.without_row(r))).collect()
}

#[derive(Clone, Debug)]
pub struct SylvesterMatrix {
    pub matrix: PolyMatrix,
    pub deg_f: u32,
    pub deg_g: u32,
}

/// Coefficients of `p` as a polynomial in `v`, index = power.
fn coefficients_in(p: &Polynomial, v: Var) -> Result<Vec<Polynomial>, LinalgError> {
    let (deg, coeffs) = p.degree_and_coeff(v)?;
    let Some(d) = deg.finite() else {
        return Ok(Vec::new());
    };
    let mut out = vec![Polynomial::zero(p.ambient()); d as usize + 1];
    for (e, c) in coeffs {
        out[e as usize] = c;
    }
    Ok(out)
}

/// Rows list shifts of `f` first, then shifts of `g`; highest power leftmost.
pub fn sylvester_matrix(f: &Polynomial, g: &Polynomial, v: Var) -> Result<SylvesterMatrix, LinalgError> {
    let fc = coefficients_in(f, v)?;
    let gc = coefficients_in(g, v)?;
    if fc.len() < 2 {
        return Err(LinalgError::DegenerateResultant(format!("`{f}` is constant in {v}")));
    }
    if gc.is_empty() {
        return Err(LinalgError::DegenerateResultant("second argument is zero".into()));
    }
    let n = fc.len() - 1;
    let k = gc.len() - 1;
    let size = n + k;
    let mut s = PolyMatrix::zeros(f.ambient(), size, size);
    for r in 0..k {
        for (pow, c) in fc.iter().enumerate() {
            s.set(r, r + n - pow, c.clone());
        }
    }
    for r in 0..n {
        for (pow, c) in gc.iter().enumerate() {
            s.set(k + r, r + k - pow, c.clone());
        }
    }
    Ok(SylvesterMatrix { matrix: s, deg_f: n as u32, deg_g: k as u32 })
}

/// Resultant in `v` of `f` (leading `v`-coefficient a nonzero constant) and `g`.
pub fn sylvester_resultant(f: &Polynomial, g: &Polynomial, v: Var) -> Result<Polynomial, LinalgError> {
    let fc = coefficients_in(f, v)?;
    match fc.last().and_then(Polynomial::as_constant) {
        Some(c) if fc.len() >= 2 && !c.is_zero() => {}
        _ => {
            return Err(LinalgError::DegenerateResultant(format!(
                "`{f}` must have positive degree in {v} and a constant leading coefficient"
            )))
        }
    }
    let gc = coefficients_in(g, v)?;
    if gc.is_empty() {
        return Err(LinalgError::DegenerateResultant("second argument is zero".into()));
    }
    if gc.len() == 1 {
        return Ok(g.pow(fc.len() as u32 - 1));
    }
    let s = sylvester_matrix(f, g, v)?;
    determinant(&s.matrix)
}

/// Matrix of multiplication by `g` on `R[v]/(f)` in the basis `1, v, ..., v^{n-1}`,
/// row `i` holding the coefficients of `v^i g mod f`. Needs `f` monic in `v`.
pub fn multiplication_matrix(f: &Polynomial, g: &Polynomial, v: Var) -> Result<PolyMatrix, LinalgError> {
    let fc = coefficients_in(f, v)?;
    if fc.len() < 2 || !fc.last().is_some_and(Polynomial::is_one) {
        return Err(LinalgError::DegenerateResultant(format!("`{f}` is not monic of positive degree in {v}")));
    }
    let n = fc.len() - 1;
    let mut rem = coefficients_in(g, v)?;
    // g mod f
    while rem.len() > n {
        let lead = rem.pop().expect("nonempty");
        if lead.is_zero() {
            continue;
        }
        let shift = rem.len() - n;
        for (k, c) in fc[..n].iter().enumerate() {
            rem[shift + k] = &rem[shift + k] - &(&lead * c);
        }
    }
    rem.resize(n, Polynomial::zero(f.ambient()));
    let mut rows = Vec::with_capacity(n);
    for _ in 0..n {
        let top = rem[n - 1].clone();
        let mut next = Vec::with_capacity(n);
        next.push(Polynomial::zero(f.ambient()));
        next.extend(rem[..n - 1].iter().cloned());
        if !top.is_zero() {
            for (k, c) in fc[..n].iter().enumerate() {
                next[k] = &next[k] - &(&top * c);
            }
        }
        rows.push(std::mem::replace(&mut rem, next));
    }
    PolyMatrix::from_rows(f.ambient(), rows)
}

/// `Res_v(f, g)` as the determinant of multiplication by `g` modulo `f`.
/// Agrees with [`sylvester_resultant`]; much smaller matrices when `deg g`
/// is close to `deg f`.
pub fn monic_resultant(f: &Polynomial, g: &Polynomial, v: Var) -> Result<Polynomial, LinalgError> {
    let fc = coefficients_in(f, v)?;
    let lc = match fc.last().and_then(Polynomial::as_constant) {
        Some(c) if fc.len() >= 2 && !c.is_zero() => c,
        _ => {
            return Err(LinalgError::DegenerateResultant(format!(
                "`{f}` must have positive degree in {v} and a constant leading coefficient"
            )))
        }
    };
    if g.is_zero() {
        return Err(LinalgError::DegenerateResultant("second argument is zero".into()));
    }
    let deg_g = g.degree_in(v)?.finite().expect("nonzero");
    let monic = f.scale(&lc.recip());
    let det = determinant(&multiplication_matrix(&monic, g, v)?)?;
    Ok(det.scale(&num_traits::pow(lc, deg_g as usize)))
}

/// Weight of `det m` read off from the entries, without expanding it.
///
/// If every nonzero entry `(i, j)` is homogeneous of weight `r_i + c_j` for
/// some row and column weights, each term of the determinant has weight
/// `Σ r_i + Σ c_j`. Returns `Inhomogeneous` when no such split exists (the
/// determinant may still be homogeneous then) and `Any` when no permutation
/// survives.
pub fn determinant_weight(m: &PolyMatrix, w: &WeightAssignment) -> Homogeneity {
    let n = m.rows;
    if n != m.cols {
        return Homogeneity::Inhomogeneous;
    }
    let mut entry_w = vec![None; n * n];
    for i in 0..n {
        for j in 0..n {
            match m.get(i, j).weight_check(w) {
                Homogeneity::Any => {}
                Homogeneity::Homogeneous(h) => entry_w[i * n + j] = Some(h),
                Homogeneity::Inhomogeneous => return Homogeneity::Inhomogeneous,
            }
        }
    }
    // potentials on the bipartite graph rows + columns, one component at a time
    let mut row_w: Vec<Option<(i64, i64)>> = vec![None; n];
    let mut col_w: Vec<Option<(i64, i64)>> = vec![None; n];
    let mut total = (0i64, 0i64);
    for start in 0..n {
        if row_w[start].is_some() {
            continue;
        }
        row_w[start] = Some((0, 0));
        let mut stack = vec![(true, start)];
        let (mut rows, mut cols) = (0usize, 0usize);
        let mut sum = (0i64, 0i64);
        while let Some((is_row, k)) = stack.pop() {
            let here = if is_row { row_w[k] } else { col_w[k] }.expect("visited");
            if is_row {
                rows += 1;
            } else {
                cols += 1;
            }
            sum = (sum.0 + here.0, sum.1 + here.1);
            for other in 0..n {
                let (i, j) = if is_row { (k, other) } else { (other, k) };
                let Some(e) = entry_w[i * n + j] else { continue };
                let want = (e.0 - here.0, e.1 - here.1);
                let slot = if is_row { &mut col_w[other] } else { &mut row_w[other] };
                match slot {
                    Some(have) if *have != want => return Homogeneity::Inhomogeneous,
                    Some(_) => {}
                    None => {
                        *slot = Some(want);
                        stack.push((!is_row, other));
                    }
                }
            }
        }
        if rows != cols {
            return Homogeneity::Any;
        }
        total = (total.0 + sum.0, total.1 + sum.1);
    }
    if col_w.iter().any(Option::is_none) {
        return Homogeneity::Any;
    }
    Homogeneity::Homogeneous(total)
}

/// Rank of a dense rational matrix by Gaussian elimination.
pub fn rational_rank(rows: &[Vec<Rational>]) -> usize {
    let mut a: Vec<Vec<Rational>> = rows.to_vec();
    let cols = a.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..a.len()).find(|&r| !a[r][c].is_zero()) else {
            continue;
        };
        a.swap(rank, p);
        let inv = a[rank][c].recip();
        for v in a[rank].iter_mut() {
            *v *= &inv;
        }
        debug_assert!(a[rank][c].is_one());
        let pivot_row = a[rank].clone();
        for (r, row) in a.iter_mut().enumerate() {
            if r == rank || row[c].is_zero() {
                continue;
            }
            let factor = row[c].clone();
            for (x, y) in row.iter_mut().zip(&pivot_row) {
                *x -= &factor * y;
            }
        }
        rank += 1;
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{int, ParamTag};

    fn ring() -> Arc<VariableSet> {
        VariableSet::with_params([ParamTag::new(1, 2, 1), ParamTag::new(2, 1, 1)])
    }

    fn m(r: &Arc<VariableSet>, text: &str) -> PolyMatrix {
        PolyMatrix::parse(r, text).unwrap()
    }

    fn p(r: &Arc<VariableSet>, s: &str) -> Polynomial {
        Polynomial::parse(r, s).unwrap()
    }

    #[test]
    fn nonflat_family_sylvester_determinant() {
        // a = a[1,2,1], b = a[2,1,1]
        let r = ring();
        let s = m(
            &r,
            "1 | -y*a[2,1,1] | 0
             y*a[1,2,1] | y^2*(1 - a[2,1,1]*a[1,2,1]) | 0
             0 | y*a[1,2,1] | y^2*(1 - a[2,1,1]*a[1,2,1])",
        );
        assert_eq!(determinant(&s).unwrap(), p(&r, "y^4*(1 - a[2,1,1]*a[1,2,1])"));
        assert_eq!(bareiss_determinant(&s).unwrap(), p(&r, "y^4*(1 - a[2,1,1]*a[1,2,1])"));
    }

    #[test]
    fn nonfinite_family_sylvester_determinant() {
        let r = ring();
        let s = m(
            &r,
            "1 | -y^2*a[2,1,1] | 0
             y^2*a[1,2,1] | y^3*(1 - y*a[2,1,1]*a[1,2,1]) | 0
             0 | y^2*a[1,2,1] | y^3*(1 - y*a[2,1,1]*a[1,2,1])",
        );
        // the printed value is y^7ab - y^6; the displayed matrix gives its negative
        assert_eq!(determinant(&s).unwrap(), -p(&r, "y^7*a[1,2,1]*a[2,1,1] - y^6"));
    }

    #[test]
    fn identity_and_shape() {
        let r = ring();
        assert!(determinant(&PolyMatrix::identity(&r, 5)).unwrap().is_one());
        assert!(matches!(determinant(&PolyMatrix::zeros(&r, 2, 3)), Err(LinalgError::Shape(_))));
        assert!(matches!(
            maximal_minors(&PolyMatrix::zeros(&r, 2, 2)),
            Err(LinalgError::Shape(_))
        ));
    }

    #[test]
    fn bareiss_handles_zero_pivots() {
        let r = ring();
        let s = m(
            &r,
            "0 | 1 | 0 | 0 | 0
             1 | 0 | 0 | 0 | 0
             0 | 0 | x | 0 | 0
             0 | 0 | 0 | y | 1
             0 | 0 | 0 | 1 | y",
        );
        assert_eq!(bareiss_determinant(&s).unwrap(), p(&r, "-x*y^2 + x"));
        let singular = m(&r, "0 | 1 | 1 | 1 | 1\n0 | x | 1 | 1 | 1\n0 | 1 | y | 1 | 1\n0 | 1 | 1 | 1 | 1\n0 | 1 | 1 | 1 | x");
        assert!(bareiss_determinant(&singular).unwrap().is_zero());
    }

    #[test]
    fn determinant_methods_agree() {
        let r = ring();
        let texts = [
            "y | a[1,2,1] | 0 | 1 | x\n-x | y^2 | 3 | 0 | 1\n0 | -x | y | a[2,1,1] | 0\nx*y | 0 | -x | 1 | y\n1 | 1 | 0 | -x | y^3",
            "0 | 1 | 0 | 0 | 0 | 2\n1 | 0 | 0 | 0 | 0 | x\n0 | 0 | x | 0 | 0 | 0\n0 | 0 | 0 | y | 1 | 0\n0 | 0 | 0 | 1 | y | 0\ny | 0 | 1 | 0 | 0 | 1",
        ];
        for t in texts {
            let a = m(&r, t);
            let c = cofactor_determinant(&a);
            assert_eq!(minor_expansion_determinant(&a), c);
            assert_eq!(bareiss_determinant(&a).unwrap(), c);
        }
    }

    #[test]
    fn graded_determinant_weight() {
        let r = ring();
        // weights x (1,0), y (0,1), t and u unused, a[1,2,1] (-1,1), a[2,1,1] (1,-1)
        let w = WeightAssignment::new(vec![(1, 0), (0, 1), (0, 0), (0, 0), (-1, 1), (1, -1)]);
        let a = m(&r, "x^2 | x*y | y^2\nx | y + x*a[1,2,1] | y*a[1,2,1]\n1 | a[1,2,1] | a[1,2,1]^2");
        let det = cofactor_determinant(&a);
        assert_eq!(determinant_weight(&a, &w), det.weight_check(&w));
        assert!(matches!(determinant_weight(&a, &w), Homogeneity::Homogeneous(_)));
        let bad = m(&r, "x | 1\ny | x");
        assert_eq!(determinant_weight(&bad, &w), Homogeneity::Inhomogeneous);
        let singular = m(&r, "x | y\n0 | 0");
        assert_eq!(determinant_weight(&singular, &w), Homogeneity::Any);
    }

    #[test]
    fn minors_of_point_matrix() {
        let r = ring();
        let me = m(&r, "y^3\n-x");
        let minors = maximal_minors(&me).unwrap();
        assert_eq!(minors, vec![p(&r, "-x"), p(&r, "y^3")]);
    }

    #[test]
    fn minors_of_nonfinite_family() {
        let r = ring();
        // (3,3) restricted to a = a[1,2,2], b = a[2,1,2]; reuse tags of this ring
        let me = m(&r, "y^3 | y^2*a[1,2,1]\n-x + y^2*a[2,1,1] | 1\n0 | -x");
        let minors = maximal_minors(&me).unwrap();
        assert_eq!(minors[0], p(&r, "x^2 - x*y^2*a[2,1,1]"));
        assert_eq!(minors[1], p(&r, "-x*y^3"));
        assert_eq!(minors[2], p(&r, "-y^4*a[1,2,1]*a[2,1,1] + y^3 + x*y^2*a[1,2,1]"));
    }

    #[test]
    fn resultant_of_origin_minors() {
        let r = ring();
        for t in 1..=5 {
            for mt in 1..=5 {
                let f = Polynomial::var_pow(&r, Var::X, t).unwrap();
                let g = Polynomial::var_pow(&r, Var::Y, mt).unwrap();
                let res = sylvester_resultant(&f, &g, Var::X).unwrap();
                assert_eq!(res, Polynomial::var_pow(&r, Var::Y, t * mt).unwrap());
            }
        }
    }

    #[test]
    fn resultant_of_nonflat_minors() {
        let r = ring();
        let f = p(&r, "x^2 - x*y*a[2,1,1]");
        let g = p(&r, "x*y*a[1,2,1] + y^2*(1 - a[2,1,1]*a[1,2,1])");
        let res = sylvester_resultant(&f, &g, Var::X).unwrap();
        let expected = p(&r, "y^4*(1 - a[2,1,1]*a[1,2,1])");
        assert!(res == expected || res == -expected);
        let s = sylvester_matrix(&f, &g, Var::X).unwrap();
        assert_eq!((s.deg_f, s.deg_g, s.matrix.rows()), (2, 1, 3));
    }

    #[test]
    fn multiplication_matrix_agrees_with_sylvester() {
        let r = ring();
        let cases = [
            ("x^2 - x*y*a[2,1,1]", "x*y*a[1,2,1] + y^2*(1 - a[2,1,1]*a[1,2,1])"),
            ("x^3 + y*x + a[1,2,1]", "x^2 - 3*y + 1/2"),
            ("2*x^3 - x + y^2", "a[2,1,1]*x^4 + x*y - 1"),
            ("x - y", "x^5 + a[1,2,1]"),
            ("x^2 + 1", "y^3"),
            ("x^4 - a[1,2,1]*x^2*y + 7", "x^3*y - x*a[2,1,1] + y^2"),
        ];
        for (f, g) in cases {
            let (f, g) = (p(&r, f), p(&r, g));
            assert_eq!(
                monic_resultant(&f, &g, Var::X).unwrap(),
                sylvester_resultant(&f, &g, Var::X).unwrap(),
                "Res({f}, {g})"
            );
        }
    }

    #[test]
    fn degenerate_resultants() {
        let r = ring();
        let g = p(&r, "x + 1");
        assert!(matches!(
            sylvester_resultant(&p(&r, "y^2"), &g, Var::X),
            Err(LinalgError::DegenerateResultant(_))
        ));
        assert!(matches!(
            sylvester_resultant(&p(&r, "y*x^2 + 1"), &g, Var::X),
            Err(LinalgError::DegenerateResultant(_))
        ));
        assert!(matches!(
            sylvester_resultant(&g, &Polynomial::zero(&r), Var::X),
            Err(LinalgError::DegenerateResultant(_))
        ));
    }

    #[test]
    fn text_and_json_forms() {
        let r = ring();
        let me = m(&r, "y + a[1,2,1] | 0\n-x | 1\n0 | -x");
        let text = me.to_string();
        assert_eq!(text, "y + a[1,2,1] | 0\n-x | 1\n0 | -x\n");
        assert_eq!(PolyMatrix::parse(&r, &text).unwrap(), me);
        let json = serde_json::to_string(&me.to_json()).unwrap();
        let back: MatrixJson = serde_json::from_str(&json).unwrap();
        assert_eq!(PolyMatrix::from_json(&r, &back).unwrap(), me);
    }

    #[test]
    fn rank_of_rational_matrix() {
        let rows = vec![
            vec![int(1), int(2), int(3)],
            vec![int(2), int(4), int(6)],
            vec![int(0), int(1), int(1)],
        ];
        assert_eq!(rational_rank(&rows), 2);
        assert_eq!(rational_rank(&[]), 0);
    }
}
