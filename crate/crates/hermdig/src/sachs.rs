//! Characteristic-polynomial coefficients by basic-subgraph expansion, and
//! the weighted triangle census. This route is combinatorial and entirely
//! independent of the Faddeev-LeVerrier path, which makes it the oracle the
//! census and switching machinery are checked against.
//!
//! A basic subgraph is a vertex-disjoint union of single edges of the
//! underlying graph and cycles that carry an even number of non-digon arcs.
//! A cycle with `f` forward and `b` backward arcs along a fixed traversal
//! contributes the sign `(-1)^{|f-b|/2}`; each component contributes a sign
//! of its own and each cycle a factor of 2.

use num_bigint::BigInt;

use crate::digraph::{Digraph, Graph};
use crate::poly::Poly;
use crate::CharPoly;

/// One component of a basic subgraph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Component {
    Edge(usize, usize),
    /// Vertices in traversal order; the cycle closes back to the first.
    Cycle(Vec<usize>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasicSubgraph {
    pub components: Vec<Component>,
    pub order: usize,
}

impl BasicSubgraph {
    pub fn cycle_count(&self) -> usize {
        self.components
            .iter()
            .filter(|c| matches!(c, Component::Cycle(_)))
            .count()
    }

    pub fn component_count(&self) -> usize {
        self.components.len()
    }

    /// Sum of the per-cycle sign exponents `|f - b| / 2`, mod 2. Digons count
    /// toward neither direction. Independent of traversal orientation.
    pub fn r_parity(&self, d: &Digraph) -> usize {
        let mut r = 0;
        for comp in &self.components {
            if let Component::Cycle(verts) = comp {
                let fwd = cycle_r(d, verts);
                debug_assert_eq!(
                    fwd % 2,
                    {
                        let mut rev = verts.clone();
                        rev.reverse();
                        cycle_r(d, &rev) % 2
                    },
                    "cycle sign must not depend on traversal orientation"
                );
                r += fwd;
            }
        }
        r % 2
    }
}

/// `|f - b| / 2` for one cycle; requires an even number of non-digon arcs.
fn cycle_r(d: &Digraph, verts: &[usize]) -> usize {
    let mut f = 0usize;
    let mut b = 0usize;
    for k in 0..verts.len() {
        let u = verts[k];
        let v = verts[(k + 1) % verts.len()];
        match d.pair(u, v) {
            crate::digraph::PairState::Fwd => f += 1,
            crate::digraph::PairState::Bwd => b += 1,
            crate::digraph::PairState::Digon => {}
            crate::digraph::PairState::None => unreachable!("cycle uses non-adjacent pair"),
        }
    }
    assert!((f + b) % 2 == 0, "cycle is not basic: odd non-digon arc count");
    f.abs_diff(b) / 2
}

/// All simple cycles of a graph, each listed once: the smallest vertex
/// first, travelling toward its smaller neighbour on the cycle.
pub(crate) fn cycles_of(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.order();
    let mut out = Vec::new();
    let mut path: Vec<usize> = Vec::new();
    let mut used = vec![false; n];
    for s in 0..n {
        path.clear();
        path.push(s);
        used[s] = true;
        dfs_cycles(g, s, &mut path, &mut used, &mut out);
        used[s] = false;
    }
    out
}

fn dfs_cycles(
    g: &Graph,
    start: usize,
    path: &mut Vec<usize>,
    used: &mut [bool],
    out: &mut Vec<Vec<usize>>,
) {
    let u = *path.last().unwrap();
    for v in g.neighbors(u) {
        if v == start && path.len() >= 3 {
            if path[1] < path[path.len() - 1] {
                out.push(path.clone());
            }
        } else if v > start && !used[v] {
            path.push(v);
            used[v] = true;
            dfs_cycles(g, start, path, used, out);
            used[v] = false;
            path.pop();
        }
    }
}

/// Admissible component pool with bitmasks, sorted for unique enumeration.
fn component_pool(d: &Digraph) -> Vec<(u64, Component)> {
    assert!(d.order() <= 60, "basic-subgraph enumeration is gated to order <= 60");
    let g = d.underlying_graph();
    let mut pool: Vec<(u64, Component)> = Vec::new();
    for (i, j) in g.edge_list() {
        pool.push(((1 << i) | (1 << j), Component::Edge(i, j)));
    }
    for cyc in cycles_of(&g) {
        let arcs = cyc
            .iter()
            .enumerate()
            .filter(|&(k, _)| !d.pair(cyc[k], cyc[(k + 1) % cyc.len()]).is_digon())
            .count();
        if arcs % 2 != 0 {
            continue;
        }
        let mask = cyc.iter().fold(0u64, |m, &v| m | (1 << v));
        pool.push((mask, Component::Cycle(cyc)));
    }
    pool
}

/// Every vertex-disjoint union of edges and admissible cycles spanning
/// exactly `order` vertices, each emitted once.
pub fn basic_subgraphs(d: &Digraph, order: usize) -> Vec<BasicSubgraph> {
    assert!(order <= d.order());
    let pool = component_pool(d);
    let mut out = Vec::new();
    let mut chosen: Vec<usize> = Vec::new();
    rec_pack(&pool, 0, 0u64, order, &mut chosen, &mut out);
    out
}

fn rec_pack(
    pool: &[(u64, Component)],
    from: usize,
    used: u64,
    remaining: usize,
    chosen: &mut Vec<usize>,
    out: &mut Vec<BasicSubgraph>,
) {
    if remaining == 0 {
        let components = chosen.iter().map(|&k| pool[k].1.clone()).collect();
        let order = chosen
            .iter()
            .map(|&k| pool[k].0.count_ones() as usize)
            .sum();
        out.push(BasicSubgraph { components, order });
        return;
    }
    for k in from..pool.len() {
        let (mask, _) = &pool[k];
        let size = mask.count_ones() as usize;
        if size > remaining || (mask & used) != 0 {
            continue;
        }
        chosen.push(k);
        rec_pack(pool, k + 1, used | mask, remaining - size, chosen, out);
        chosen.pop();
    }
}

/// Coefficient of `t^j` in the characteristic polynomial, by summing
/// `(-1)^{components + r} 2^{cycles}` over basic subgraphs of order `n - j`.
pub fn sachs_coefficient(d: &Digraph, j: usize) -> BigInt {
    assert!(j <= d.order());
    let order = d.order() - j;
    if order == 0 {
        return BigInt::from(1);
    }
    let mut total = BigInt::from(0);
    for b in basic_subgraphs(d, order) {
        let sign = (b.component_count() + b.r_parity(d)) % 2;
        let weight = BigInt::from(1) << b.cycle_count();
        if sign == 0 {
            total += weight;
        } else {
            total -= weight;
        }
    }
    total
}

/// Full characteristic polynomial through the basic-subgraph expansion.
pub fn sachs_char_poly(d: &Digraph) -> CharPoly {
    let n = d.order();
    Poly::from_coeffs((0..=n).map(|j| sachs_coefficient(d, j)).collect())
}

/// Counts of the four triangle types with an even number of non-digon arcs:
/// `x1` is the one-digon type of walk weight -1 (digon plus a directed path
/// through the apex), `x2`/`x3` the one-digon types with both arcs into /
/// out of the apex, `x4` the all-digon triangle.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TriangleCensus {
    pub x1: usize,
    pub x2: usize,
    pub x3: usize,
    pub x4: usize,
}

impl TriangleCensus {
    /// `tr(H^3) = 6 (x2 + x3 + x4 - x1)`.
    pub fn trace_h3(&self) -> i64 {
        6 * (self.x2 as i64 + self.x3 as i64 + self.x4 as i64 - self.x1 as i64)
    }
}

/// The four reference triangles, indexed 1..=4.
pub fn reference_triangles() -> [Digraph; 4] {
    let mut x1 = Digraph::empty(3);
    x1.add_digon(0, 1);
    x1.add_arc(2, 1);
    x1.add_arc(0, 2);
    let mut x2 = Digraph::empty(3);
    x2.add_digon(0, 1);
    x2.add_arc(0, 2);
    x2.add_arc(1, 2);
    let mut x3 = Digraph::empty(3);
    x3.add_digon(0, 1);
    x3.add_arc(2, 0);
    x3.add_arc(2, 1);
    let mut x4 = Digraph::empty(3);
    x4.add_digon(0, 1);
    x4.add_digon(1, 2);
    x4.add_digon(0, 2);
    [x1, x2, x3, x4]
}

/// Counts induced triangles isomorphic to each reference type, testing all
/// six vertex bijections per triangle.
pub fn triangle_census(d: &Digraph) -> TriangleCensus {
    let refs = reference_triangles();
    let n = d.order();
    let mut counts = [0usize; 4];
    for a in 0..n {
        for b in (a + 1)..n {
            for c in (b + 1)..n {
                if !(d.pair(a, b).is_adjacent()
                    && d.pair(b, c).is_adjacent()
                    && d.pair(a, c).is_adjacent())
                {
                    continue;
                }
                let t = d.induced_subdigraph(&[a, b, c]).unwrap();
                for (k, r) in refs.iter().enumerate() {
                    if crate::canon::is_isomorphic(&t, r).unwrap() {
                        counts[k] += 1;
                        break;
                    }
                }
            }
        }
    }
    TriangleCensus {
        x1: counts[0],
        x2: counts[1],
        x3: counts[2],
        x4: counts[3],
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::Family;
    use crate::hermitian::{char_poly, power_entry};
    use crate::poly::int_poly;
    use num_traits::Zero;

    #[test]
    fn order_two_basics_are_the_edges(){
        let d = Family::Xab(1, 2).build().unwrap();
        let basics = basic_subgraphs(&d, 2);
        assert_eq!(basics.len(), d.edge_count());
        assert!(basics
            .iter()
            .all(|b| matches!(b.components.as_slice(), [Component::Edge(..)])));
    }

    #[test]
    fn triangle_admissibility() {
        // The oriented 3-cycle with one reversed arc has three non-digon
        // arcs, so no basic subgraph of order 3 exists.
        let c3t = Family::OneReversedCycle(3).build().unwrap();
        assert!(basic_subgraphs(&c3t, 3).is_empty());
        // The one-digon triangle has two non-digon arcs: exactly one.
        let k3p = Family::K3Prime.build().unwrap();
        assert_eq!(basic_subgraphs(&k3p, 3).len(), 1);
    }

    #[test]
    fn coefficients_match_known_polys() {
        let c4t = Family::OneReversedCycle(4).build().unwrap();
        assert_eq!(sachs_char_poly(&c4t), int_poly(&[4, 0, -4, 0, 1]));
        let k3 = Family::CompleteGraph(3).build().unwrap();
        assert_eq!(sachs_char_poly(&k3), int_poly(&[-2, -3, 0, 1]));
        let k3p = Family::K3Prime.build().unwrap();
        assert_eq!(sachs_char_poly(&k3p), int_poly(&[2, -3, 0, 1]));
    }

    #[test]
    fn agrees_with_faddeev_leverrier_on_families() {
        for fam in [
            Family::K4Prime,
            Family::Xab(2, 2),
            Family::Tournament(5),
            Family::DirectedCycle(6),
            Family::OneDigonCycle(5),
            Family::OneDigonReversedCycle(6),
            Family::Y(2, 3),
            Family::StarGraph(5),
        ] {
            let d = fam.build().unwrap();
            assert_eq!(sachs_char_poly(&d), char_poly(&d), "family {fam:?}");
        }
    }

    #[test]
    fn monic_and_traceless() {
        let d = Family::Y(2, 2).build().unwrap();
        let n = d.order();
        assert_eq!(sachs_coefficient(&d, n), BigInt::from(1));
        assert!(sachs_coefficient(&d, n - 1).is_zero());
        assert_eq!(
            sachs_coefficient(&d, n - 2),
            BigInt::from(-(d.edge_count() as i64))
        );
    }

    #[test]
    fn triangle_census_cases() {
        let census = triangle_census(&Family::CompleteGraph(3).build().unwrap());
        assert_eq!(census, TriangleCensus { x1: 0, x2: 0, x3: 0, x4: 1 });
        assert_eq!(census.trace_h3(), 6);

        let census = triangle_census(&Family::K3Prime.build().unwrap());
        assert_eq!(census, TriangleCensus { x1: 1, x2: 0, x3: 0, x4: 0 });
        assert_eq!(census.trace_h3(), -6);

        let census = triangle_census(&Family::OneReversedCycle(3).build().unwrap());
        assert_eq!(census, TriangleCensus { x1: 0, x2: 0, x3: 0, x4: 0 });
        assert_eq!(census.trace_h3(), 0);
    }

    #[test]
    fn trace_identity_against_matrix_powers() {
        for fam in [
            Family::K4Prime,
            Family::CompleteGraph(5),
            Family::Xab(2, 1),
            Family::Y(2, 2),
        ] {
            let d = fam.build().unwrap();
            let census = triangle_census(&d);
            let mut tr = BigInt::zero();
            for u in 0..d.order() {
                let e = power_entry(&d, 3, u, u);
                assert!(e.is_real());
                tr += e.re;
            }
            assert_eq!(tr, BigInt::from(census.trace_h3()), "family {fam:?}");
        }
    }

    #[test]
    fn reference_triangles_have_expected_weights() {
        let refs = reference_triangles();
        let weight = |d: &Digraph| {
            let w = power_entry(d, 3, 0, 0);
            // tr(H^3) = 6 * weight for a single triangle
            w.re.clone()
        };
        assert_eq!(weight(&refs[0]), BigInt::from(-2)); // each vertex sees -1 twice
        for r in &refs[1..] {
            assert_eq!(weight(r), BigInt::from(2));
        }
    }
}
