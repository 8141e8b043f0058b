//! Reduced Gröbner bases over Q for small ideals (Buchberger with the
//! Gebauer–Möller criteria), plus the ideal operations built on them.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::poly::{Monomial, PolyError, Polynomial, Rational, Var, VariableSet};
use crate::torus::Cocharacter;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroebnerError {
    #[error("ideal does not have finite colength")]
    NotFinite,
    #[error("variable `{0}` is needed as an auxiliary variable but already occurs")]
    AuxiliaryInUse(Var),
    #[error("saturation by the zero polynomial")]
    SaturateByZero,
    #[error(transparent)]
    Poly(#[from] PolyError),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OrderKind {
    Lex,
    DegLex,
    /// Deglex on the front block, ties broken by deglex on the rest. Any
    /// monomial involving a front variable beats every monomial without one.
    Elimination { front: Vec<usize> },
}

/// A global monomial order. `priority` lists variable indices from most to
/// least significant.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialOrder {
    pub kind: OrderKind,
    pub priority: Vec<usize>,
}

impl MonomialOrder {
    pub fn lex(n: usize) -> Self {
        MonomialOrder { kind: OrderKind::Lex, priority: (0..n).collect() }
    }

    pub fn deglex(n: usize) -> Self {
        MonomialOrder { kind: OrderKind::DegLex, priority: (0..n).collect() }
    }

    pub fn elimination(n: usize, front: Vec<usize>) -> Self {
        MonomialOrder { kind: OrderKind::Elimination { front }, priority: (0..n).collect() }
    }

    pub fn name(&self) -> &'static str {
        match self.kind {
            OrderKind::Lex => "lex",
            OrderKind::DegLex => "deglex",
            OrderKind::Elimination { .. } => "elimination",
        }
    }

    fn lex_on(&self, a: &Monomial, b: &Monomial, keep: impl Fn(usize) -> bool) -> Ordering {
        for &i in self.priority.iter().filter(|&&i| keep(i)) {
            match a.0[i].cmp(&b.0[i]) {
                Ordering::Equal => continue,
                o => return o,
            }
        }
        Ordering::Equal
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match &self.kind {
            OrderKind::Lex => self.lex_on(a, b, |_| true),
            OrderKind::DegLex => a
                .degree()
                .cmp(&b.degree())
                .then_with(|| self.lex_on(a, b, |_| true)),
            OrderKind::Elimination { front } => {
                let fdeg = |m: &Monomial| front.iter().map(|&i| m.0[i]).sum::<u32>();
                let is_front = |i: usize| front.contains(&i);
                fdeg(a)
                    .cmp(&fdeg(b))
                    .then_with(|| self.lex_on(a, b, is_front))
                    .then_with(|| a.degree().cmp(&b.degree()))
                    .then_with(|| self.lex_on(a, b, |i| !is_front(i)))
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ideal {
    ambient: Arc<VariableSet>,
    generators: Vec<Polynomial>,
}

impl Ideal {
    /// Zero generators are dropped.
    pub fn new(ambient: &Arc<VariableSet>, generators: Vec<Polynomial>) -> Result<Self, GroebnerError> {
        let generators = generators
            .into_iter()
            .filter(|g| !g.is_zero())
            .map(|g| g.to_ambient(ambient))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Ideal { ambient: ambient.clone(), generators })
    }

    pub fn parse(ambient: &Arc<VariableSet>, gens: &[&str]) -> Result<Self, GroebnerError> {
        let gens = gens
            .iter()
            .map(|s| Polynomial::parse(ambient, s))
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(ambient, gens)
    }

    pub fn ambient(&self) -> &Arc<VariableSet> {
        &self.ambient
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn with_generator(&self, p: Polynomial) -> Result<Self, GroebnerError> {
        let mut gens = self.generators.clone();
        gens.push(p);
        Self::new(&self.ambient, gens)
    }

    pub fn to_ambient(&self, target: &Arc<VariableSet>) -> Result<Self, GroebnerError> {
        Self::new(target, self.generators.clone())
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.generators.iter().map(ToString::to_string).collect()
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.to_strings().join(", "))
    }
}

#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    order: MonomialOrder,
    basis: Vec<Polynomial>,
    leads: Vec<Monomial>,
    source: Ideal,
}

/// JSON form of a Gröbner computation, used by reports and golden files.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroebnerJson {
    pub order: String,
    pub basis: Vec<String>,
}

impl GroebnerBasis {
    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    /// Reduced basis, sorted by increasing leading monomial.
    pub fn basis(&self) -> &[Polynomial] {
        &self.basis
    }

    pub fn leading_monomials(&self) -> &[Monomial] {
        &self.leads
    }

    pub fn source(&self) -> &Ideal {
        &self.source
    }

    pub fn ideal(&self) -> Ideal {
        Ideal { ambient: self.source.ambient.clone(), generators: self.basis.clone() }
    }

    pub fn is_unit(&self) -> bool {
        self.basis.len() == 1 && self.basis[0].is_one()
    }

    pub fn contains(&self, p: &Polynomial) -> Result<bool, GroebnerError> {
        Ok(normal_form(p, self)?.is_zero())
    }

    pub fn to_json(&self) -> GroebnerJson {
        GroebnerJson {
            order: self.order.name().to_string(),
            basis: self.basis.iter().map(ToString::to_string).collect(),
        }
    }
}

// Internal representation: terms sorted descending by the working order,
// leading coefficient 1 for basis elements.
type Terms = Vec<(Monomial, Rational)>;

fn sorted_terms(p: &Polynomial, ord: &MonomialOrder) -> Terms {
    let mut t = p.terms().to_vec();
    t.sort_by(|a, b| ord.cmp(&b.0, &a.0));
    t
}

fn make_monic(mut t: Terms) -> Terms {
    if let Some((_, c)) = t.first() {
        if !c.is_one() {
            let inv = c.recip();
            for (_, v) in t.iter_mut() {
                *v *= &inv;
            }
        }
    }
    t
}

/// `a - c * m * b`, all sorted by `ord`.
fn sub_scaled(a: &[(Monomial, Rational)], c: &Rational, m: &Monomial, b: &[(Monomial, Rational)], ord: &MonomialOrder) -> Terms {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let mut i = 0;
    let mut bi = b.iter().map(|(bm, bc)| (bm.mul(m), bc * c)).peekable();
    loop {
        let next_b = bi.peek();
        match (a.get(i), next_b) {
            (None, None) => break,
            (Some(x), None) => {
                out.push(x.clone());
                i += 1;
            }
            (None, Some(_)) => {
                let (m2, c2) = bi.next().unwrap();
                out.push((m2, -c2));
            }
            (Some(x), Some(y)) => match ord.cmp(&x.0, &y.0) {
                Ordering::Greater => {
                    out.push(x.clone());
                    i += 1;
                }
                Ordering::Less => {
                    let (m2, c2) = bi.next().unwrap();
                    out.push((m2, -c2));
                }
                Ordering::Equal => {
                    let (_, c2) = bi.next().unwrap();
                    let v = &x.1 - c2;
                    if !v.is_zero() {
                        out.push((x.0.clone(), v));
                    }
                    i += 1;
                }
            },
        }
    }
    out
}

/// Full reduction of `p` by monic `reducers`.
fn reduce_full(p: Terms, reducers: &[&Terms], ord: &MonomialOrder) -> Terms {
    let mut rem = Vec::new();
    let mut work = p;
    let mut start = 0;
    while start < work.len() {
        let (m, c) = &work[start];
        let hit = reducers.iter().find(|g| g[0].0.divides(m));
        match hit {
            Some(g) => {
                let q = g[0].0.quotient_of(m);
                let c = c.clone();
                work = sub_scaled(&work[start..], &c, &q, g, ord);
                start = 0;
            }
            None => {
                rem.push(work[start].clone());
                start += 1;
            }
        }
    }
    rem
}

struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

fn s_polynomial(f: &Terms, g: &Terms, lcm: &Monomial, ord: &MonomialOrder) -> Terms {
    let mf = f[0].0.quotient_of(lcm);
    let mg = g[0].0.quotient_of(lcm);
    let scaled_f: Terms = f[1..].iter().map(|(m, c)| (m.mul(&mf), c.clone())).collect();
    sub_scaled(&scaled_f, &Rational::one(), &mg, &g[1..], ord)
}

/// Unique reduced Gröbner basis of `ideal` under `ord`.
pub fn reduced_groebner(ideal: &Ideal, ord: &MonomialOrder) -> GroebnerBasis {
    let mut polys: Vec<Terms> = Vec::new();
    let mut active: Vec<bool> = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();

    let mut inputs: Vec<Terms> = ideal
        .generators
        .iter()
        .map(|g| make_monic(sorted_terms(g, ord)))
        .collect();
    inputs.sort_by(|a, b| ord.cmp(&a[0].0, &b[0].0));

    let insert = |h: Terms, polys: &mut Vec<Terms>, active: &mut Vec<bool>, pairs: &mut Vec<Pair>| {
        let hl = h[0].0.clone();
        let hidx = polys.len();
        polys.push(h);
        active.push(true);
        // Gebauer–Möller update
        let mut cands: Vec<(usize, Monomial)> = (0..hidx)
            .filter(|&g| active[g])
            .map(|g| (g, hl.lcm(&polys[g][0].0)))
            .collect();
        let mut kept: Vec<(usize, Monomial)> = Vec::new();
        while let Some((g1, l1)) = cands.pop() {
            let coprime = hl.coprime(&polys[g1][0].0);
            let dominated = cands.iter().chain(kept.iter()).any(|(_, l2)| l2.divides(&l1));
            if coprime || !dominated {
                kept.push((g1, l1));
            }
        }
        let fresh: Vec<Pair> = kept
            .into_iter()
            .filter(|(g, _)| !hl.coprime(&polys[*g][0].0))
            .map(|(g, lcm)| Pair { i: g, j: hidx, lcm })
            .collect();
        pairs.retain(|p| {
            !hl.divides(&p.lcm)
                || hl.lcm(&polys[p.i][0].0) == p.lcm
                || hl.lcm(&polys[p.j][0].0) == p.lcm
        });
        pairs.extend(fresh);
        for g in 0..hidx {
            if active[g] && hl.divides(&polys[g][0].0) {
                active[g] = false;
            }
        }
    };

    for g in inputs {
        let reducers: Vec<&Terms> = (0..polys.len()).filter(|&k| active[k]).map(|k| &polys[k]).collect();
        let h = reduce_full(g, &reducers, ord);
        if !h.is_empty() {
            insert(make_monic(h), &mut polys, &mut active, &mut pairs);
        }
    }

    while !pairs.is_empty() {
        let best = (0..pairs.len())
            .min_by(|&a, &b| {
                let (pa, pb) = (&pairs[a], &pairs[b]);
                pa.lcm
                    .degree()
                    .cmp(&pb.lcm.degree())
                    .then_with(|| ord.cmp(&pa.lcm, &pb.lcm))
                    .then_with(|| (pa.i, pa.j).cmp(&(pb.i, pb.j)))
            })
            .expect("nonempty");
        let pair = pairs.swap_remove(best);
        let s = s_polynomial(&polys[pair.i], &polys[pair.j], &pair.lcm, ord);
        let reducers: Vec<&Terms> = (0..polys.len()).filter(|&k| active[k]).map(|k| &polys[k]).collect();
        let h = reduce_full(s, &reducers, ord);
        if !h.is_empty() {
            insert(make_monic(h), &mut polys, &mut active, &mut pairs);
        }
    }

    // minimize, then inter-reduce
    let mut minimal: Vec<Terms> = (0..polys.len())
        .filter(|&k| active[k])
        .map(|k| polys[k].clone())
        .collect();
    minimal.sort_by(|a, b| ord.cmp(&a[0].0, &b[0].0));
    let mut keep: Vec<Terms> = Vec::new();
    for g in minimal {
        if !keep.iter().any(|k| k[0].0.divides(&g[0].0)) {
            keep.push(g);
        }
    }
    let mut reduced = Vec::with_capacity(keep.len());
    for k in 0..keep.len() {
        let others: Vec<&Terms> = keep.iter().enumerate().filter(|(o, _)| *o != k).map(|(_, g)| g).collect();
        let head = keep[k][0].clone();
        let tail = reduce_full(keep[k][1..].to_vec(), &others, ord);
        let mut t = vec![head];
        t.extend(tail);
        reduced.push(t);
    }

    let amb = &ideal.ambient;
    GroebnerBasis {
        order: ord.clone(),
        leads: reduced.iter().map(|t| t[0].0.clone()).collect(),
        basis: reduced.into_iter().map(|t| Polynomial::from_terms(amb, t)).collect(),
        source: ideal.clone(),
    }
}

/// Remainder of `p` on division by the basis; zero iff `p` is in the ideal.
pub fn normal_form(p: &Polynomial, gb: &GroebnerBasis) -> Result<Polynomial, GroebnerError> {
    let p = p.to_ambient(&gb.source.ambient)?;
    let ord = &gb.order;
    let terms: Vec<Terms> = gb.basis.iter().map(|g| sorted_terms(g, ord)).collect();
    let refs: Vec<&Terms> = terms.iter().collect();
    let rem = reduce_full(sorted_terms(&p, ord), &refs, ord);
    Ok(Polynomial::from_terms(&gb.source.ambient, rem))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Colength {
    Finite(usize),
    Infinite,
}

impl Colength {
    pub fn finite(self) -> Option<usize> {
        match self {
            Colength::Finite(n) => Some(n),
            Colength::Infinite => None,
        }
    }
}

impl fmt::Display for Colength {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Colength::Finite(n) => write!(f, "{n}"),
            Colength::Infinite => f.write_str("infinite"),
        }
    }
}

/// Standard monomials of a leading-term set, if there are finitely many.
pub fn standard_monomials(leads: &[Monomial], nvars: usize) -> Option<Vec<Monomial>> {
    if leads.iter().any(Monomial::is_one) {
        return Some(Vec::new());
    }
    let mut bounds = Vec::with_capacity(nvars);
    for v in 0..nvars {
        let pure = leads
            .iter()
            .filter(|m| m.0.iter().enumerate().all(|(i, &e)| i == v || e == 0))
            .map(|m| m.0[v])
            .min()?;
        bounds.push(pure);
    }
    let mut out = Vec::new();
    let mut cur = vec![0u32; nvars];
    loop {
        let m = Monomial(cur.clone());
        if !leads.iter().any(|l| l.divides(&m)) {
            out.push(m);
        }
        // odometer over the bounding box
        let mut k = 0;
        loop {
            if k == nvars {
                return Some(out);
            }
            cur[k] += 1;
            if cur[k] < bounds[k] {
                break;
            }
            cur[k] = 0;
            k += 1;
        }
    }
}

fn occurring_ring(ideal: &Ideal) -> Arc<VariableSet> {
    let amb = &ideal.ambient;
    let used: Vec<Var> = amb
        .vars()
        .iter()
        .copied()
        .filter(|v| ideal.generators.iter().any(|g| g.support_vars().contains(v)))
        .collect();
    // keep x and y even when they do not occur: colength is over the plane
    let mut vars: Vec<Var> = amb
        .vars()
        .iter()
        .copied()
        .filter(|v| used.contains(v) || matches!(v, Var::X | Var::Y))
        .collect();
    if vars.is_empty() {
        vars = amb.vars().to_vec();
    }
    VariableSet::new(vars).expect("subset of a valid set")
}

/// Dimension of the quotient ring over the variables that occur (x and y always count).
pub fn colength(ideal: &Ideal) -> Colength {
    let ring = occurring_ring(ideal);
    let moved = ideal.to_ambient(&ring).expect("restricted to occurring variables");
    let gb = reduced_groebner(&moved, &MonomialOrder::deglex(ring.len()));
    match standard_monomials(&gb.leads, ring.len()) {
        Some(s) => Colength::Finite(s.len()),
        None => Colength::Infinite,
    }
}

pub fn ideal_equal(a: &Ideal, b: &Ideal) -> Result<bool, GroebnerError> {
    let b = b.to_ambient(&a.ambient)?;
    let ord = MonomialOrder::deglex(a.ambient.len());
    Ok(reduced_groebner(a, &ord).basis == reduced_groebner(&b, &ord).basis)
}

/// Generators of `ideal ∩ k[remaining variables]`.
pub fn eliminate(ideal: &Ideal, front: &[Var]) -> Result<Ideal, GroebnerError> {
    let amb = &ideal.ambient;
    let idx = front.iter().map(|v| amb.require(*v)).collect::<Result<Vec<_>, _>>()?;
    if idx.is_empty() {
        return Ok(ideal.clone());
    }
    let gb = reduced_groebner(ideal, &MonomialOrder::elimination(amb.len(), idx.clone()));
    let gens = gb
        .basis
        .into_iter()
        .zip(gb.leads)
        .filter(|(_, lead)| idx.iter().all(|&i| lead.0[i] == 0))
        .map(|(g, _)| g)
        .collect();
    Ideal::new(amb, gens)
}

/// `ideal : f^∞` via the Rabinowitsch trick with an auxiliary variable `u`.
pub fn saturate(ideal: &Ideal, f: &Polynomial) -> Result<Ideal, GroebnerError> {
    if f.is_zero() {
        return Err(GroebnerError::SaturateByZero);
    }
    let amb = ideal.ambient.clone();
    let f = f.to_ambient(&amb)?;
    if f.as_constant().is_some() {
        return Ok(ideal.clone());
    }
    let uses_u = |p: &Polynomial| p.support_vars().contains(&Var::U);
    if ideal.generators.iter().any(uses_u) || uses_u(&f) {
        return Err(GroebnerError::AuxiliaryInUse(Var::U));
    }
    let work = if amb.index_of(Var::U).is_some() {
        amb.clone()
    } else {
        let mut vars = amb.vars().to_vec();
        vars.push(Var::U);
        VariableSet::new(vars)?
    };
    let u = Polynomial::var(&work, Var::U)?;
    let rab = &(&u * &f.to_ambient(&work)?) - &Polynomial::one(&work);
    let extended = ideal.to_ambient(&work)?.with_generator(rab)?;
    eliminate(&extended, &[Var::U])?.to_ambient(&amb)
}

/// Flat limit `lim_{t→0} ψ(t)·[I]` of a finite-colength ideal of `k[x, y]`.
///
/// Points move by `(x, y) ↦ (t^α x, t^β y)`, so each `f ∈ I` is carried to
/// `f(t^{-α} x, t^{-β} y)`. After clearing the largest power of `t^{-1}`
/// every term gets the factor `t^{W - w}` with `w` its ψ-degree and `W`
/// the maximum; the closure is `(⟨f̃⟩ : t^∞)` and the limit is its fiber at
/// `t = 0`.
pub fn gm_limit(ideal: &Ideal, psi: &Cocharacter) -> Result<Ideal, GroebnerError> {
    let plane = VariableSet::plane();
    let planar = ideal.to_ambient(&plane)?;
    let gb = reduced_groebner(&planar, &MonomialOrder::deglex(2));
    if standard_monomials(&gb.leads, 2).is_none() {
        return Err(GroebnerError::NotFinite);
    }
    let ring = VariableSet::new(vec![Var::X, Var::Y, Var::T])?;
    let homogenized: Vec<Polynomial> = gb
        .basis
        .iter()
        .map(|g| {
            let top = g
                .terms()
                .iter()
                .map(|(m, _)| psi.degree(m.0[0], m.0[1]))
                .max()
                .unwrap_or(0);
            let terms = g.terms().iter().map(|(m, c)| {
                let w = psi.degree(m.0[0], m.0[1]);
                (Monomial(vec![m.0[0], m.0[1], (top - w) as u32]), c.clone())
            });
            Polynomial::from_terms(&ring, terms)
        })
        .collect();
    let family = Ideal::new(&ring, homogenized)?;
    let t = Polynomial::var(&ring, Var::T)?;
    let closure = saturate(&family, &t)?;
    let at_zero: HashMap<Var, Rational> = HashMap::from([(Var::T, Rational::zero())]);
    let fiber = closure
        .generators
        .iter()
        .map(|g| g.specialize(&at_zero)?.to_ambient(&plane))
        .collect::<Result<Vec<_>, _>>()?;
    let limit = reduced_groebner(&Ideal::new(&plane, fiber)?, &MonomialOrder::deglex(2));
    limit.ideal().to_ambient(&ideal.ambient)
}
