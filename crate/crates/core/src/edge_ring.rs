//! The edge ring `K[K_n]`, i.e. the second squarefree Veronese subring.
//!
//! The ring is `Z^n`-graded with `deg(x_ij) = e_i + e_j` and every graded
//! component is one-dimensional, so a monomial is determined by its
//! multidegree. A vector `a` is the multidegree of a ring monomial exactly
//! when it is the degree sequence of a loopless multigraph on `[n]`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{input, Result};
use crate::graph::{Edge, Vertex};

/// The edge variable `x_ij`; `x_ij` and `x_ji` name the same variable.
pub type EdgeVariable = Edge;

/// Exponent vector of `t_1 .. t_n`, entry `v - 1` belonging to vertex `v`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Multidegree(Vec<u32>);

impl Multidegree {
    pub fn new(entries: Vec<u32>) -> Self {
        Multidegree(entries)
    }

    pub fn zero(n: usize) -> Self {
        Multidegree(vec![0; n])
    }

    /// `e_i + e_j` for the variable `x_ij`.
    pub fn of_edge(e: &EdgeVariable, n: usize) -> Result<Self> {
        if e.hi() > n {
            return input(format!("edge {e} does not fit in {n} vertices"));
        }
        let mut a = vec![0; n];
        a[e.lo() - 1] = 1;
        a[e.hi() - 1] = 1;
        Ok(Multidegree(a))
    }

    /// Multidegree of a product of edge variables.
    pub fn of_edges<'a, I>(edges: I, n: usize) -> Result<Self>
    where
        I: IntoIterator<Item = &'a EdgeVariable>,
    {
        let mut acc = Multidegree::zero(n);
        for e in edges {
            acc = acc.add(&Multidegree::of_edge(e, n)?);
        }
        Ok(acc)
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    pub fn get(&self, v: Vertex) -> u32 {
        self.0[v - 1]
    }

    /// Total degree in the `t` variables (twice the edge-ring degree).
    pub fn total(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Degree in the standard grading of the edge ring (number of edge factors).
    pub fn degree(&self) -> u32 {
        self.total() / 2
    }

    pub fn add(&self, other: &Multidegree) -> Multidegree {
        debug_assert_eq!(self.n(), other.n());
        Multidegree(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// Componentwise `self - other`, or `None` if some entry would go negative.
    pub fn checked_sub(&self, other: &Multidegree) -> Option<Multidegree> {
        if self.n() != other.n() {
            return None;
        }
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()
            .map(Multidegree)
    }

    pub fn is_realizable(&self) -> bool {
        is_realizable(self)
    }
}

impl From<Vec<u32>> for Multidegree {
    fn from(v: Vec<u32>) -> Self {
        Multidegree(v)
    }
}

impl fmt::Display for Multidegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Whether `t^a` lies in `K[K_n]`: the sum is even and no entry exceeds the
/// sum of the others. For `n = 2` this forces `a_1 = a_2`, and for `n = 1`
/// only the zero vector passes.
pub fn is_realizable(a: &Multidegree) -> bool {
    let total: u64 = a.0.iter().map(|x| u64::from(*x)).sum();
    let max = a.0.iter().copied().max().map_or(0, u64::from);
    total.is_multiple_of(2) && 2 * max <= total
}

/// A loopless multigraph with degree sequence `a`, or `None`.
///
/// Greedy: repeatedly join the vertex of largest remaining degree to the
/// vertex of next largest remaining degree (ties to the smaller label).
pub fn realize(a: &Multidegree) -> Option<Vec<Edge>> {
    let mut rest: Vec<u32> = a.0.clone();
    let mut edges = Vec::with_capacity(a.degree() as usize);
    loop {
        let first = argmax(&rest, None)?;
        if rest[first] == 0 {
            break;
        }
        let second = argmax(&rest, Some(first))?;
        if rest[second] == 0 {
            return None;
        }
        rest[first] -= 1;
        rest[second] -= 1;
        edges.push(Edge::new(first + 1, second + 1).expect("distinct positive labels"));
    }
    edges.sort();
    Some(edges)
}

fn argmax(values: &[u32], skip: Option<usize>) -> Option<usize> {
    values
        .iter()
        .enumerate()
        .filter(|(k, _)| Some(*k) != skip)
        .fold(None, |best: Option<(usize, u32)>, (k, v)| match best {
            Some((_, bv)) if bv >= *v => best,
            _ => Some((k, *v)),
        })
        .map(|(k, _)| k)
}

/// `t^b` divides `t^a` inside the edge ring: `a - b` is a ring monomial.
pub fn monomial_divides(b: &Multidegree, a: &Multidegree) -> Result<bool> {
    if b.n() != a.n() {
        return input(format!("multidegrees {b} and {a} have different lengths"));
    }
    if !is_realizable(b) {
        return input(format!("{b} is not a monomial of the edge ring"));
    }
    if !is_realizable(a) {
        return input(format!("{a} is not a monomial of the edge ring"));
    }
    Ok(divides_unchecked(b, a))
}

#[inline]
pub(crate) fn divides_unchecked(b: &Multidegree, a: &Multidegree) -> bool {
    // a - b >= 0 with even sum and no entry above half the sum
    let mut total = 0u32;
    let mut max = 0u32;
    for (x, y) in a.0.iter().zip(&b.0) {
        if x < y {
            return false;
        }
        let d = x - y;
        total += d;
        max = max.max(d);
    }
    total.is_multiple_of(2) && 2 * max <= total
}

/// Quadratic binomial `left - right` attached to a 4-cycle of `K_n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ToricRelation {
    pub left: [EdgeVariable; 2],
    pub right: [EdgeVariable; 2],
}

impl ToricRelation {
    pub fn left_multidegree(&self, n: usize) -> Result<Multidegree> {
        Multidegree::of_edges(&self.left, n)
    }

    pub fn right_multidegree(&self, n: usize) -> Result<Multidegree> {
        Multidegree::of_edges(&self.right, n)
    }

    /// Both sides have the same multidegree.
    pub fn is_balanced(&self, n: usize) -> bool {
        matches!(
            (self.left_multidegree(n), self.right_multidegree(n)),
            (Ok(l), Ok(r)) if l == r
        )
    }

    /// The four underlying vertices are pairwise distinct.
    pub fn is_four_cycle(&self) -> bool {
        let mut vs: Vec<Vertex> = self.left.iter().flat_map(|e| [e.lo(), e.hi()]).collect();
        vs.sort_unstable();
        vs.dedup();
        vs.len() == 4
    }
}

impl fmt::Display for ToricRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b] = &self.left;
        let [c, d] = &self.right;
        write!(
            f,
            "x{}{}*x{}{} - x{}{}*x{}{}",
            a.lo(),
            a.hi(),
            b.lo(),
            b.hi(),
            c.lo(),
            c.hi(),
            d.lo(),
            d.hi()
        )
    }
}

/// The quadratic generators of the toric ideal of `K[K_n]`: three binomials
/// per 4-subset `i < j < k < l`, one for each pair of its perfect matchings.
pub fn toric_generators(n: usize) -> Result<Vec<ToricRelation>> {
    if n < 2 {
        return input(format!("toric generators need n >= 2, got {n}"));
    }
    let e = |a, b| Edge::new(a, b).expect("distinct vertices");
    let mut out = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            for k in j + 1..=n {
                for l in k + 1..=n {
                    let ij_kl = [e(i, j), e(k, l)];
                    let ik_jl = [e(i, k), e(j, l)];
                    let il_jk = [e(i, l), e(j, k)];
                    out.push(ToricRelation {
                        left: ij_kl,
                        right: ik_jl,
                    });
                    out.push(ToricRelation {
                        left: ij_kl,
                        right: il_jk,
                    });
                    out.push(ToricRelation {
                        left: ik_jl,
                        right: il_jk,
                    });
                }
            }
        }
    }
    Ok(out)
}

/// All ring monomials of degree `d` (multidegree sum `2d`), ascending.
pub fn enumerate_monomials(n: usize, d: u32) -> Vec<Multidegree> {
    fn fill(pos: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Multidegree>) {
        let n = cur.len();
        if pos + 1 == n {
            cur[pos] = left;
            let m = Multidegree(cur.clone());
            if is_realizable(&m) {
                out.push(m);
            }
            return;
        }
        for x in 0..=left {
            cur[pos] = x;
            fill(pos + 1, left - x, cur, out);
        }
    }
    let mut out = Vec::new();
    if n == 0 {
        return out;
    }
    let mut cur = vec![0; n];
    fill(0, 2 * d, &mut cur, &mut out);
    out
}

/// Monomials of every degree in `lo..=hi`, grouped by degree.
pub fn enumerate_monomials_upto(n: usize, lo: u32, hi: u32) -> Vec<Multidegree> {
    (lo..=hi).flat_map(|d| enumerate_monomials(n, d)).collect()
}
