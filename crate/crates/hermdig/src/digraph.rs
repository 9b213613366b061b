//! Digraphs stored as a dense table of unordered-pair states, plus the
//! undirected [`Graph`] companion type and the structural operations on them.
//!
//! Every unordered pair `{i, j}` with `i < j` carries one of four states:
//! no adjacency, an arc `i -> j`, an arc `j -> i`, or a digon (both arcs).
//! Mixed graphs are handled by modelling each undirected edge as a digon.
//! The table uses colex pair order (`(0,1), (0,2), (1,2), (0,3), ...`), so
//! the first `k(k-1)/2` entries are exactly the subdigraph induced by the
//! first `k` vertices.

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DigraphError {
    #[error("vertex {0} out of range for order {1}")]
    VertexOutOfRange(usize, usize),
    #[error("vertex subset contains duplicates")]
    DuplicateVertex,
}

/// State of an unordered pair `{i, j}` with `i < j`. `Fwd` is the arc from
/// the smaller to the larger endpoint.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
#[repr(u8)]
pub enum PairState {
    None = 0,
    Fwd = 1,
    Bwd = 2,
    Digon = 3,
}

impl PairState {
    pub fn code(self) -> u8 {
        self as u8
    }

    pub fn from_code(code: u8) -> PairState {
        match code & 3 {
            0 => PairState::None,
            1 => PairState::Fwd,
            2 => PairState::Bwd,
            _ => PairState::Digon,
        }
    }

    /// State seen from the opposite endpoint order.
    pub fn mirror(self) -> PairState {
        match self {
            PairState::Fwd => PairState::Bwd,
            PairState::Bwd => PairState::Fwd,
            s => s,
        }
    }

    pub fn is_adjacent(self) -> bool {
        self != PairState::None
    }

    pub fn is_digon(self) -> bool {
        self == PairState::Digon
    }

    /// Number of arcs the pair contributes.
    pub fn arc_count(self) -> usize {
        match self {
            PairState::None => 0,
            PairState::Fwd | PairState::Bwd => 1,
            PairState::Digon => 2,
        }
    }
}

/// Index of pair `{i, j}`, `i < j`, in colex order.
#[inline]
pub(crate) fn pair_index(i: usize, j: usize) -> usize {
    debug_assert!(i < j);
    j * (j - 1) / 2 + i
}

/// Simple digraph on vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Digraph {
    n: usize,
    pairs: Vec<PairState>,
}

impl Digraph {
    pub fn empty(n: usize) -> Self {
        let pairs = if n > 0 { n * (n - 1) / 2 } else { 0 };
        Digraph {
            n,
            pairs: vec![PairState::None; pairs],
        }
    }

    pub fn from_pair_states(n: usize, pairs: Vec<PairState>) -> Self {
        assert_eq!(pairs.len(), n * (n - 1) / 2);
        Digraph { n, pairs }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub(crate) fn pair_states(&self) -> &[PairState] {
        &self.pairs
    }

    /// Pair state as seen from `(u, v)`: `Fwd` means the arc `u -> v`.
    pub fn pair(&self, u: usize, v: usize) -> PairState {
        assert!(u != v && u < self.n && v < self.n);
        if u < v {
            self.pairs[pair_index(u, v)]
        } else {
            self.pairs[pair_index(v, u)].mirror()
        }
    }

    /// Sets the pair state as seen from `(u, v)`.
    pub fn set_pair(&mut self, u: usize, v: usize, state: PairState) {
        assert!(u != v && u < self.n && v < self.n);
        if u < v {
            self.pairs[pair_index(u, v)] = state;
        } else {
            self.pairs[pair_index(v, u)] = state.mirror();
        }
    }

    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        matches!(self.pair(u, v), PairState::Fwd | PairState::Digon)
    }

    /// Adds the arc `u -> v`, upgrading an opposite arc to a digon.
    pub fn add_arc(&mut self, u: usize, v: usize) {
        let next = match self.pair(u, v) {
            PairState::None | PairState::Fwd => PairState::Fwd,
            PairState::Bwd | PairState::Digon => PairState::Digon,
        };
        self.set_pair(u, v, next);
    }

    pub fn add_digon(&mut self, u: usize, v: usize) {
        self.set_pair(u, v, PairState::Digon);
    }

    pub fn unordered_pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (1..self.n).flat_map(|j| (0..j).map(move |i| (i, j)))
    }

    /// All arcs as ordered pairs; a digon contributes both directions.
    pub fn arcs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (i, j) in self.unordered_pairs() {
            match self.pairs[pair_index(i, j)] {
                PairState::None => {}
                PairState::Fwd => out.push((i, j)),
                PairState::Bwd => out.push((j, i)),
                PairState::Digon => {
                    out.push((i, j));
                    out.push((j, i));
                }
            }
        }
        out
    }

    pub fn arc_count(&self) -> usize {
        self.pairs.iter().map(|s| s.arc_count()).sum()
    }

    pub fn digon_count(&self) -> usize {
        self.pairs.iter().filter(|s| s.is_digon()).count()
    }

    pub fn edge_count(&self) -> usize {
        self.pairs.iter().filter(|s| s.is_adjacent()).count()
    }

    /// No digons at all.
    pub fn is_oriented(&self) -> bool {
        !self.pairs.iter().any(|s| s.is_digon())
    }

    /// Every arc lies in a digon; such a digraph is just an undirected graph.
    pub fn is_graph(&self) -> bool {
        self.pairs
            .iter()
            .all(|s| matches!(s, PairState::None | PairState::Digon))
    }

    pub fn underlying_graph(&self) -> Graph {
        Graph {
            n: self.n,
            edges: self.pairs.iter().map(|s| s.is_adjacent()).collect(),
        }
    }

    pub fn converse(&self) -> Digraph {
        Digraph {
            n: self.n,
            pairs: self.pairs.iter().map(|s| s.mirror()).collect(),
        }
    }

    /// The graph formed by the digons alone.
    pub fn symmetric_part(&self) -> Graph {
        Graph {
            n: self.n,
            edges: self.pairs.iter().map(|s| s.is_digon()).collect(),
        }
    }

    /// The digraph of the non-digon arcs alone.
    pub fn asymmetric_part(&self) -> Digraph {
        Digraph {
            n: self.n,
            pairs: self
                .pairs
                .iter()
                .map(|s| if s.is_digon() { PairState::None } else { *s })
                .collect(),
        }
    }

    /// Restriction to a vertex subset, relabelled `0..k` in increasing order
    /// of the original labels.
    pub fn induced_subdigraph(&self, subset: &[usize]) -> Result<Digraph, DigraphError> {
        let mut verts: Vec<usize> = subset.to_vec();
        verts.sort_unstable();
        if verts.windows(2).any(|w| w[0] == w[1]) {
            return Err(DigraphError::DuplicateVertex);
        }
        if let Some(&v) = verts.iter().find(|&&v| v >= self.n) {
            return Err(DigraphError::VertexOutOfRange(v, self.n));
        }
        let mut out = Digraph::empty(verts.len());
        for a in 0..verts.len() {
            for b in (a + 1)..verts.len() {
                out.set_pair(a, b, self.pair(verts[a], verts[b]));
            }
        }
        Ok(out)
    }

    /// Deletes one vertex.
    pub fn delete_vertex(&self, v: usize) -> Digraph {
        let keep: Vec<usize> = (0..self.n).filter(|&u| u != v).collect();
        self.induced_subdigraph(&keep).unwrap()
    }

    /// Cartesian product: vertex `(x, y)` is numbered `x * other.n + y`.
    pub fn cartesian_product(&self, other: &Digraph) -> Digraph {
        let n = self.n * other.n;
        let mut out = Digraph::empty(n);
        let code = |x: usize, y: usize| x * other.n + y;
        for x1 in 0..self.n {
            for x2 in 0..self.n {
                if x1 == x2 {
                    continue;
                }
                for y in 0..other.n {
                    if x1 < x2 {
                        out.set_pair(code(x1, y), code(x2, y), self.pair(x1, x2));
                    }
                }
            }
        }
        for y1 in 0..other.n {
            for y2 in (y1 + 1)..other.n {
                for x in 0..self.n {
                    out.set_pair(code(x, y1), code(x, y2), other.pair(y1, y2));
                }
            }
        }
        out
    }

    /// Relabels vertices: `perm[old] = new`.
    pub fn apply_perm(&self, perm: &[usize]) -> Digraph {
        assert_eq!(perm.len(), self.n);
        let mut out = Digraph::empty(self.n);
        for (i, j) in self.unordered_pairs() {
            out.set_pair(perm[i], perm[j], self.pairs[pair_index(i, j)]);
        }
        out
    }

    pub fn degree_profile(&self) -> DegreeProfile {
        let mut deg = vec![0usize; self.n];
        let mut indeg = vec![0usize; self.n];
        let mut outdeg = vec![0usize; self.n];
        for (i, j) in self.unordered_pairs() {
            match self.pairs[pair_index(i, j)] {
                PairState::None => {}
                PairState::Fwd => {
                    deg[i] += 1;
                    deg[j] += 1;
                    outdeg[i] += 1;
                    indeg[j] += 1;
                }
                PairState::Bwd => {
                    deg[i] += 1;
                    deg[j] += 1;
                    outdeg[j] += 1;
                    indeg[i] += 1;
                }
                PairState::Digon => {
                    deg[i] += 1;
                    deg[j] += 1;
                    outdeg[i] += 1;
                    outdeg[j] += 1;
                    indeg[i] += 1;
                    indeg[j] += 1;
                }
            }
        }
        DegreeProfile {
            degree: deg,
            in_degree: indeg,
            out_degree: outdeg,
        }
    }

    pub fn is_weakly_connected(&self) -> bool {
        self.underlying_graph().is_connected()
    }

    pub fn weak_components(&self) -> Vec<Vec<usize>> {
        self.underlying_graph().components()
    }

    pub fn is_strongly_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let reach = |forward: bool| {
            let mut seen = vec![false; self.n];
            let mut stack = vec![0usize];
            seen[0] = true;
            while let Some(u) = stack.pop() {
                for v in 0..self.n {
                    if v == u || seen[v] {
                        continue;
                    }
                    let has = if forward {
                        self.has_arc(u, v)
                    } else {
                        self.has_arc(v, u)
                    };
                    if has {
                        seen[v] = true;
                        stack.push(v);
                    }
                }
            }
            seen.into_iter().all(|b| b)
        };
        reach(true) && reach(false)
    }
}

/// Per-vertex degrees: underlying degree, in-degree, out-degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeProfile {
    pub degree: Vec<usize>,
    pub in_degree: Vec<usize>,
    pub out_degree: Vec<usize>,
}

impl DegreeProfile {
    pub fn max_degree(&self) -> usize {
        self.degree.iter().copied().max().unwrap_or(0)
    }
}

/// Simple undirected graph on vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Graph {
    n: usize,
    edges: Vec<bool>,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        let pairs = if n > 0 { n * (n - 1) / 2 } else { 0 };
        Graph {
            n,
            edges: vec![false; pairs],
        }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        assert!(u != v);
        let (i, j) = if u < v { (u, v) } else { (v, u) };
        self.edges[pair_index(i, j)]
    }

    pub fn set_edge(&mut self, u: usize, v: usize, present: bool) {
        assert!(u != v);
        let (i, j) = if u < v { (u, v) } else { (v, u) };
        self.edges[pair_index(i, j)] = present;
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        self.set_edge(u, v, true);
    }

    pub fn edge_count(&self) -> usize {
        self.edges.iter().filter(|&&b| b).count()
    }

    pub fn edge_list(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for j in 1..self.n {
            for i in 0..j {
                if self.edges[pair_index(i, j)] {
                    out.push((i, j));
                }
            }
        }
        out
    }

    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        (0..self.n).filter(|&u| u != v && self.has_edge(u, v)).collect()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.neighbors(v).len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn max_degree(&self) -> usize {
        self.degrees().into_iter().max().unwrap_or(0)
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.components().len() == 1
    }

    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut comp = vec![usize::MAX; self.n];
        let mut out: Vec<Vec<usize>> = Vec::new();
        for s in 0..self.n {
            if comp[s] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut stack = vec![s];
            comp[s] = id;
            let mut members = vec![s];
            while let Some(u) = stack.pop() {
                for v in self.neighbors(u) {
                    if comp[v] == usize::MAX {
                        comp[v] = id;
                        stack.push(v);
                        members.push(v);
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    pub fn is_bipartite(&self) -> bool {
        let mut color = vec![2u8; self.n];
        for s in 0..self.n {
            if color[s] != 2 {
                continue;
            }
            color[s] = 0;
            let mut stack = vec![s];
            while let Some(u) = stack.pop() {
                for v in self.neighbors(u) {
                    if color[v] == 2 {
                        color[v] = 1 - color[u];
                        stack.push(v);
                    } else if color[v] == color[u] {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// If the graph is a single cycle, returns its vertices in cyclic order.
    pub fn cycle_order(&self) -> Option<Vec<usize>> {
        if self.n < 3 || !self.is_connected() {
            return None;
        }
        if self.degrees().iter().any(|&d| d != 2) {
            return None;
        }
        let mut order = vec![0usize];
        let mut prev = usize::MAX;
        loop {
            let u = *order.last().unwrap();
            let next = self.neighbors(u).into_iter().find(|&v| v != prev)?;
            if next == 0 {
                break;
            }
            prev = u;
            order.push(next);
        }
        (order.len() == self.n).then_some(order)
    }

    /// The digraph with every edge replaced by a digon.
    pub fn to_digraph(&self) -> Digraph {
        Digraph {
            n: self.n,
            pairs: self
                .edges
                .iter()
                .map(|&e| if e { PairState::Digon } else { PairState::None })
                .collect(),
        }
    }

    /// True when the graph is `m` disjoint edges covering every vertex.
    pub fn is_perfect_matching(&self) -> bool {
        self.degrees().iter().all(|&d| d == 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn single_arc() -> Digraph {
        let mut d = Digraph::empty(2);
        d.add_arc(0, 1);
        d
    }

    #[test]
    fn pair_orientation_is_consistent() {
        let d = single_arc();
        assert_eq!(d.pair(0, 1), PairState::Fwd);
        assert_eq!(d.pair(1, 0), PairState::Bwd);
        assert!(d.has_arc(0, 1));
        assert!(!d.has_arc(1, 0));
        let mut e = Digraph::empty(3);
        e.set_pair(2, 0, PairState::Fwd); // arc 2 -> 0
        assert!(e.has_arc(2, 0));
        assert!(!e.has_arc(0, 2));
    }

    #[test]
    fn arc_upgrade_to_digon() {
        let mut d = single_arc();
        d.add_arc(1, 0);
        assert_eq!(d.pair(0, 1), PairState::Digon);
        assert_eq!(d.arc_count(), 2);
        assert_eq!(d.digon_count(), 1);
    }

    #[test]
    fn converse_is_involution() {
        let mut d = Digraph::empty(4);
        d.add_arc(0, 1);
        d.add_arc(2, 1);
        d.add_digon(2, 3);
        assert_eq!(d.converse().converse(), d);
        assert_eq!(d.converse().underlying_graph(), d.underlying_graph());
        let digons_only = d.symmetric_part().to_digraph();
        assert_eq!(digons_only.converse(), digons_only);
    }

    #[test]
    fn parts_partition_arcs() {
        let mut d = Digraph::empty(4);
        d.add_arc(0, 1);
        d.add_digon(1, 2);
        d.add_arc(3, 2);
        let sym = d.symmetric_part();
        let asym = d.asymmetric_part();
        assert_eq!(sym.edge_count() * 2 + asym.arc_count(), d.arc_count());
        assert!(asym.is_oriented());
    }

    #[test]
    fn degree_profile_sums() {
        let mut d = Digraph::empty(4);
        d.add_arc(0, 1);
        d.add_digon(1, 2);
        d.add_arc(3, 1);
        let p = d.degree_profile();
        assert_eq!(p.degree, vec![1, 3, 1, 1]);
        let arcs = d.arc_count();
        assert_eq!(p.in_degree.iter().sum::<usize>(), arcs);
        assert_eq!(p.out_degree.iter().sum::<usize>(), arcs);
    }

    #[test]
    fn induced_subdigraph_relabels() {
        let mut d = Digraph::empty(4);
        d.add_arc(3, 1);
        d.add_digon(1, 2);
        let s = d.induced_subdigraph(&[1, 3]).unwrap();
        assert_eq!(s.order(), 2);
        assert!(s.has_arc(1, 0)); // old 3 -> old 1
        assert!(d.induced_subdigraph(&[0, 9]).is_err());
        assert!(d.induced_subdigraph(&[1, 1]).is_err());
        assert_eq!(d.induced_subdigraph(&[0, 1, 2, 3]).unwrap(), d);
    }

    #[test]
    fn cartesian_product_degrees_add() {
        let mut x = Digraph::empty(3);
        x.add_arc(0, 1);
        x.add_digon(1, 2);
        let mut y = Digraph::empty(2);
        y.add_arc(1, 0);
        let p = x.cartesian_product(&y);
        assert_eq!(p.order(), 6);
        let dp = p.degree_profile();
        let dx = x.degree_profile();
        let dy = y.degree_profile();
        for a in 0..3 {
            for b in 0..2 {
                assert_eq!(dp.degree[a * 2 + b], dx.degree[a] + dy.degree[b]);
            }
        }
        // Digon in the product iff the generating pair is a digon.
        assert!(p.pair(1 * 2, 2 * 2).is_digon());
        assert_eq!(p.pair(0, 2), PairState::Fwd);
    }

    #[test]
    fn strong_and_weak_connectivity() {
        let mut d = Digraph::empty(3);
        d.add_arc(0, 1);
        d.add_arc(1, 2);
        assert!(d.is_weakly_connected());
        assert!(!d.is_strongly_connected());
        d.add_arc(2, 0);
        assert!(d.is_strongly_connected());
    }

    #[test]
    fn cycle_order_detection() {
        let mut g = Graph::empty(4);
        for (u, v) in [(0, 2), (2, 1), (1, 3), (3, 0)] {
            g.add_edge(u, v);
        }
        let order = g.cycle_order().unwrap();
        assert_eq!(order.len(), 4);
        assert_eq!(order[0], 0);
        let mut path = Graph::empty(3);
        path.add_edge(0, 1);
        path.add_edge(1, 2);
        assert!(path.cycle_order().is_none());
    }
}
