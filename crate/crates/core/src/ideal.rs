//! Monomial ideals of the edge ring and their colon ideals by an edge
//! variable.
//!
//! A monomial lies in a monomial ideal iff it is a ring-monomial multiple of
//! one of the generators, so membership reduces to [`divides_unchecked`] on
//! multidegrees. Equality of ideals is checked either exactly (mutual
//! generator containment) or degreewise up to a bound.

use serde::{Deserialize, Serialize};

use crate::edge_ring::{divides_unchecked, enumerate_monomials_upto, is_realizable};
use crate::edge_ring::{EdgeVariable, Multidegree};
use crate::error::{input, Error, Result};
use crate::graph::{Edge, Graph, Vertex};

/// A monomial ideal of `K[K_n]`. The unit ideal carries a flag instead of
/// the generator `1`, which keeps it apart from the zero ideal (no
/// generators).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "IdealJson", into = "IdealJson")]
pub struct MonomialIdeal {
    n: usize,
    unit: bool,
    gens: Vec<Multidegree>,
}

#[derive(Serialize, Deserialize)]
struct IdealJson {
    n: usize,
    unit: bool,
    gens: Vec<Multidegree>,
}

impl TryFrom<IdealJson> for MonomialIdeal {
    type Error = Error;

    fn try_from(j: IdealJson) -> Result<Self> {
        if j.unit {
            return Ok(MonomialIdeal::unit(j.n));
        }
        MonomialIdeal::new(j.n, j.gens)
    }
}

impl From<MonomialIdeal> for IdealJson {
    fn from(i: MonomialIdeal) -> Self {
        IdealJson {
            n: i.n,
            unit: i.unit,
            gens: i.gens,
        }
    }
}

impl MonomialIdeal {
    /// Ideal generated by `gens`; each must be a ring monomial of length `n`.
    /// Generators are sorted and deduplicated but not minimalized.
    pub fn new(n: usize, gens: Vec<Multidegree>) -> Result<Self> {
        for g in &gens {
            if g.n() != n {
                return input(format!("generator {g} does not have {n} entries"));
            }
            if !is_realizable(g) {
                return input(format!("generator {g} is not a monomial of the edge ring"));
            }
        }
        Ok(Self::from_sorted(n, gens))
    }

    fn from_sorted(n: usize, mut gens: Vec<Multidegree>) -> Self {
        gens.sort();
        gens.dedup();
        MonomialIdeal {
            n,
            unit: false,
            gens,
        }
    }

    pub fn zero(n: usize) -> Self {
        MonomialIdeal {
            n,
            unit: false,
            gens: Vec::new(),
        }
    }

    pub fn unit(n: usize) -> Self {
        MonomialIdeal {
            n,
            unit: true,
            gens: Vec::new(),
        }
    }

    /// `(x_e)`.
    pub fn principal(e: &EdgeVariable, n: usize) -> Result<Self> {
        Ok(Self::from_sorted(n, vec![Multidegree::of_edge(e, n)?]))
    }

    pub fn from_edges<'a, I>(edges: I, n: usize) -> Result<Self>
    where
        I: IntoIterator<Item = &'a Edge>,
    {
        let gens = edges
            .into_iter()
            .map(|e| Multidegree::of_edge(e, n))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_sorted(n, gens))
    }

    /// `I_H`, generated by the variables of the edges of `H`.
    pub fn of_graph(h: &Graph) -> Self {
        Self::from_edges(&h.edges(), h.n()).expect("graph edges fit in n")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_unit(&self) -> bool {
        self.unit
    }

    pub fn is_zero(&self) -> bool {
        !self.unit && self.gens.is_empty()
    }

    pub fn gens(&self) -> &[Multidegree] {
        &self.gens
    }

    /// Every generator is an edge variable.
    pub fn is_linearly_generated(&self) -> bool {
        !self.unit && self.gens.iter().all(|g| g.total() == 2)
    }

    /// The edges whose variables generate the ideal, when it is linearly
    /// generated.
    pub fn edge_generators(&self) -> Option<Vec<Edge>> {
        if !self.is_linearly_generated() {
            return None;
        }
        let mut edges: Vec<Edge> = self
            .gens
            .iter()
            .map(|g| {
                let mut vs = (1..=self.n).filter(|v| g.get(*v) == 1);
                let a = vs.next().expect("two entries equal one");
                let b = vs.next().expect("two entries equal one");
                Edge::new(a, b).expect("distinct vertices")
            })
            .collect();
        edges.sort();
        Some(edges)
    }

    pub fn contains(&self, m: &Multidegree) -> Result<bool> {
        if m.n() != self.n {
            return input(format!("{m} does not have {} entries", self.n));
        }
        if !is_realizable(m) {
            return input(format!("{m} is not a monomial of the edge ring"));
        }
        Ok(self.contains_unchecked(m))
    }

    #[inline]
    pub(crate) fn contains_unchecked(&self, m: &Multidegree) -> bool {
        self.unit || self.gens.iter().any(|g| divides_unchecked(g, m))
    }

    /// The ideal generated by both generator sets.
    pub fn sum(&self, other: &MonomialIdeal) -> MonomialIdeal {
        debug_assert_eq!(self.n, other.n);
        if self.unit || other.unit {
            return MonomialIdeal::unit(self.n);
        }
        let gens = self.gens.iter().chain(&other.gens).cloned().collect();
        Self::from_sorted(self.n, gens)
    }

    /// Exact inclusion `other ⊆ self`, by generator containment.
    pub fn includes(&self, other: &MonomialIdeal) -> bool {
        if other.unit {
            return self.unit;
        }
        other.gens.iter().all(|g| self.contains_unchecked(g))
    }

    /// Exact equality of the ideals (not of the generator lists).
    pub fn same_ideal(&self, other: &MonomialIdeal) -> bool {
        self.n == other.n && self.includes(other) && other.includes(self)
    }

    pub fn minimalize(&self) -> MonomialIdeal {
        minimalize(self)
    }
}

/// Drop generators that are ring-multiples of another generator.
pub fn minimalize(ideal: &MonomialIdeal) -> MonomialIdeal {
    if ideal.unit {
        return MonomialIdeal::unit(ideal.n);
    }
    // a proper divisor has strictly smaller total degree
    let mut by_degree: Vec<&Multidegree> = ideal.gens.iter().collect();
    by_degree.sort_by_key(|g| g.total());
    let mut kept: Vec<Multidegree> = Vec::new();
    for g in by_degree {
        if !kept.iter().any(|k| divides_unchecked(k, g)) {
            kept.push(g.clone());
        }
    }
    MonomialIdeal::from_sorted(ideal.n, kept)
}

/// Degreewise comparison: for every monomial of degree `0..=max_degree`,
/// membership in `a` and in `b` agree. Ideals over a different `n` never
/// compare equal.
pub fn equal_up_to(a: &MonomialIdeal, b: &MonomialIdeal, n: usize, max_degree: u32) -> bool {
    if a.n != n || b.n != n {
        return false;
    }
    enumerate_monomials_upto(n, 0, max_degree)
        .iter()
        .all(|m| a.contains_unchecked(m) == b.contains_unchecked(m))
}

/// Brute-force colon: every monomial `m` of degree `1..=max_degree` with
/// `m * x` in `ideal`, ascending by degree then lexicographically.
pub fn colon_brute(
    ideal: &MonomialIdeal,
    x: &EdgeVariable,
    n: usize,
    max_degree: u32,
) -> Result<Vec<Multidegree>> {
    let shift = colon_divisor(ideal, x, n)?;
    Ok(enumerate_monomials_upto(n, 1, max_degree)
        .into_iter()
        .filter(|m| ideal.contains_unchecked(&m.add(&shift)))
        .collect())
}

/// The ideal generated by the brute-force colon monomials, with the unit
/// flag set when `x` itself already lies in `ideal`.
pub fn colon_brute_ideal(
    ideal: &MonomialIdeal,
    x: &EdgeVariable,
    n: usize,
    max_degree: u32,
) -> Result<MonomialIdeal> {
    let shift = colon_divisor(ideal, x, n)?;
    if ideal.contains_unchecked(&shift) {
        return Ok(MonomialIdeal::unit(n));
    }
    let gens = colon_brute(ideal, x, n, max_degree)?;
    Ok(minimalize(&MonomialIdeal::from_sorted(n, gens)))
}

fn colon_divisor(ideal: &MonomialIdeal, x: &EdgeVariable, n: usize) -> Result<Multidegree> {
    if ideal.n != n {
        return input(format!("ideal lives in {} variables, not {n}", ideal.n));
    }
    Multidegree::of_edge(x, n)
}

/// Degreewise check that `candidate` agrees with `ideal : x` on every
/// monomial of degree `0..=max_degree`. Equivalent to comparing `candidate`
/// with [`colon_brute_ideal`] via [`equal_up_to`], without materializing
/// the brute-force generator list.
pub fn matches_colon_up_to(
    candidate: &MonomialIdeal,
    ideal: &MonomialIdeal,
    x: &EdgeVariable,
    monomials: &[Multidegree],
) -> bool {
    let shift = Multidegree::of_edge(x, ideal.n).expect("divisor fits");
    monomials
        .iter()
        .all(|m| candidate.contains_unchecked(m) == ideal.contains_unchecked(&m.add(&shift)))
}

/// Exact half of a colon check: every generator `g` of `candidate` has
/// `g * x` in `ideal`, hence `candidate ⊆ ideal : x`.
pub fn generators_in_colon(
    candidate: &MonomialIdeal,
    ideal: &MonomialIdeal,
    x: &EdgeVariable,
) -> bool {
    let Ok(shift) = Multidegree::of_edge(x, ideal.n) else {
        return false;
    };
    if candidate.unit {
        return ideal.contains_unchecked(&shift);
    }
    candidate
        .gens
        .iter()
        .all(|g| ideal.contains_unchecked(&g.add(&shift)))
}

fn check_vertices(vs: &[Vertex], n: usize) -> Result<()> {
    for (k, v) in vs.iter().enumerate() {
        if *v == 0 || *v > n {
            return input(format!("vertex {v} is outside 1..={n}"));
        }
        if vs[..k].contains(v) {
            return input(format!("vertices {vs:?} are not distinct"));
        }
    }
    Ok(())
}

/// `(x_ij) : x_il = (x_pj : p != l)` for distinct `i, j, l`. The index
/// `p = j` is skipped since `x_jj` is not a variable.
pub fn colon_same_vertex(i: Vertex, j: Vertex, l: Vertex, n: usize) -> Result<MonomialIdeal> {
    check_vertices(&[i, j, l], n)?;
    let edges: Vec<Edge> = (1..=n)
        .filter(|p| *p != l && *p != j)
        .map(|p| Edge::new(p, j).expect("p != j"))
        .collect();
    MonomialIdeal::from_edges(&edges, n)
}

/// `(x_ij) : x_kl = (x_ij, x_ip * x_jp : p not in {i, j, k, l})` for
/// disjoint `{i, j}` and `{k, l}`.
pub fn colon_disjoint(
    i: Vertex,
    j: Vertex,
    k: Vertex,
    l: Vertex,
    n: usize,
) -> Result<MonomialIdeal> {
    check_vertices(&[i, j, k, l], n)?;
    let mut gens = vec![Multidegree::of_edge(&Edge::new(i, j)?, n)?];
    for p in (1..=n).filter(|p| ![i, j, k, l].contains(p)) {
        let mut a = vec![0; n];
        a[i - 1] = 1;
        a[j - 1] = 1;
        a[p - 1] = 2;
        gens.push(Multidegree::new(a));
    }
    Ok(MonomialIdeal::from_sorted(n, gens))
}

/// `(x_e) : x_x`, by case: equal edges give the unit ideal, edges sharing
/// one vertex use [`colon_same_vertex`], disjoint edges use
/// [`colon_disjoint`].
pub fn colon_principal(e: &EdgeVariable, x: &EdgeVariable, n: usize) -> Result<MonomialIdeal> {
    if e.hi() > n || x.hi() > n {
        return input(format!("edges {e} and {x} must lie in 1..={n}"));
    }
    if e == x {
        return Ok(MonomialIdeal::unit(n));
    }
    let (i, j) = e.endpoints();
    let (k, l) = x.endpoints();
    if e.is_disjoint(x) {
        return colon_disjoint(i, j, k, l, n);
    }
    // shared vertex s, e = {s, a}, x = {s, b}
    let s = if x.contains(i) { i } else { j };
    let a = e.other(s).expect("s is an endpoint of e");
    let b = x.other(s).expect("s is an endpoint of x");
    colon_same_vertex(s, a, b, n)
}

/// `I : x` for a linearly generated `I`, as the sum of principal colons.
pub fn colon_by_edge(ideal: &MonomialIdeal, x: &EdgeVariable) -> Result<MonomialIdeal> {
    let n = ideal.n;
    if ideal.unit {
        return Ok(MonomialIdeal::unit(n));
    }
    let edges = ideal.edge_generators().ok_or_else(|| {
        Error::Input("closed-form colon needs an ideal generated by edge variables".into())
    })?;
    let mut acc = MonomialIdeal::zero(n);
    for e in &edges {
        acc = acc.sum(&colon_principal(e, x, n)?);
    }
    Ok(acc)
}
