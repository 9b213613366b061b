//! Theorem-level predicates and certificates: interlacing, quotient
//! matrices, spectral-radius equality partitions and inequalities,
//! symmetric-spectrum sufficient conditions, the small-spectral-radius
//! classification, and closed-form family spectra.

use std::f64::consts::PI;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::digraph::{Digraph, Graph, PairState};
use crate::family::Family;
use crate::hermitian::{
    char_poly, eigenvalues, eigenvalues_raw, hermitian_matrix_generic, spectral_stats, Spectrum,
};
use crate::scalar::Gaussian;
use crate::switching::{Label, QuaternaryPartition};
use crate::{CharPoly, GaussianRational, DEFAULT_TOL};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum AnalysisError {
    #[error("child spectrum larger than parent")]
    ChildLargerThanParent,
    #[error("digraph has a digon; operation needs an oriented graph")]
    HasDigon,
    #[error("blocks do not partition the vertex set")]
    InvalidPartition,
    #[error("digraph is not weakly connected")]
    NotWeaklyConnected,
    #[error("digraph has no arcs")]
    EmptyDigraph,
    #[error("no closed-form spectrum known for family `{0}`")]
    UnknownClosedForm(String),
}

// ---------------------------------------------------------------------------
// Interlacing.
// ---------------------------------------------------------------------------

/// Checks `lambda_s >= kappa_s >= lambda_{s+t}` for all `s`, within the
/// spectra's tolerance.
pub fn check_interlacing(parent: &Spectrum, child: &Spectrum) -> Result<bool, AnalysisError> {
    let lam = parent.full();
    let kap = child.full();
    if kap.len() > lam.len() {
        return Err(AnalysisError::ChildLargerThanParent);
    }
    let t = lam.len() - kap.len();
    let tol = parent.tolerance.max(child.tolerance);
    for s in 0..kap.len() {
        if lam[s] + tol < kap[s] || kap[s] + tol < lam[s + t] {
            return Ok(false);
        }
    }
    Ok(true)
}

// ---------------------------------------------------------------------------
// Eigenvalue sign counts against combinatorial bounds.
// ---------------------------------------------------------------------------

#[derive(Clone, Debug, Serialize)]
pub struct EtaBounds {
    /// Largest vertex subset with no digon inside (independent in the
    /// symmetric subgraph).
    pub digon_free_size: usize,
    /// Independence number of the underlying graph.
    pub independence_number: usize,
    pub eta_plus: usize,
    pub eta_minus: usize,
    /// `eta_plus >= ceil(m/2)` and `eta_minus >= ceil(m/2)`.
    pub digon_free_bound_ok: bool,
    /// `eta_plus >= alpha` and `eta_minus >= alpha`.
    pub independence_bound_ok: bool,
}

/// Exact maximum independent set by branch and bound; fine through n = 20.
pub fn max_independent_set(g: &Graph) -> usize {
    fn rec(g: &Graph, free: &[usize], current: usize, best: &mut usize) {
        if current + free.len() <= *best {
            return;
        }
        match free.first() {
            None => *best = (*best).max(current),
            Some(&v) => {
                // Include v.
                let rest: Vec<usize> = free[1..]
                    .iter()
                    .copied()
                    .filter(|&u| !g.has_edge(u, v))
                    .collect();
                rec(g, &rest, current + 1, best);
                // Exclude v.
                rec(g, &free[1..], current, best);
            }
        }
    }
    let mut best = 0;
    let free: Vec<usize> = (0..g.order()).collect();
    rec(g, &free, 0, &mut best);
    best
}

pub fn eta_bounds_check(d: &Digraph) -> EtaBounds {
    let stats = spectral_stats(d);
    let m = max_independent_set(&d.symmetric_part());
    let alpha = max_independent_set(&d.underlying_graph());
    let half = m.div_ceil(2);
    EtaBounds {
        digon_free_size: m,
        independence_number: alpha,
        eta_plus: stats.eta_plus,
        eta_minus: stats.eta_minus,
        digon_free_bound_ok: stats.eta_plus >= half && stats.eta_minus >= half,
        independence_bound_ok: stats.eta_plus >= alpha && stats.eta_minus >= alpha,
    }
}

// ---------------------------------------------------------------------------
// Largest-eigenvalue bound for oriented graphs.
// ---------------------------------------------------------------------------

#[derive(Clone, Debug, Serialize)]
pub struct TournamentBound {
    pub lambda1: f64,
    /// `cot(pi / 2n)`.
    pub bound: f64,
    pub tight: bool,
}

pub fn tournament_bound_check(d: &Digraph) -> Result<TournamentBound, AnalysisError> {
    if !d.is_oriented() {
        return Err(AnalysisError::HasDigon);
    }
    let n = d.order();
    assert!(n >= 1);
    let bound = 1.0 / (PI / (2.0 * n as f64)).tan();
    let lambda1 = eigenvalues(d, DEFAULT_TOL).lambda_max();
    Ok(TournamentBound {
        lambda1,
        bound,
        tight: (lambda1 - bound).abs() < 1e-9,
    })
}

// ---------------------------------------------------------------------------
// Quotient matrices.
// ---------------------------------------------------------------------------

#[derive(Clone, Debug)]
pub struct PartitionQuotient {
    pub blocks: Vec<Vec<usize>>,
    /// Average block row sums, exact.
    pub b: Vec<Vec<GaussianRational>>,
    pub equitable: bool,
    /// Eigenvalues of the quotient (real; descending).
    pub eigenvalues: Vec<f64>,
}

/// Builds the quotient of `H(X)` with respect to a partition, asserting the
/// interlacing and, for equitable partitions, exact spectrum containment.
pub fn quotient(d: &Digraph, blocks: &[Vec<usize>]) -> Result<PartitionQuotient, AnalysisError> {
    let n = d.order();
    let mut seen = vec![false; n];
    for b in blocks {
        if b.is_empty() {
            return Err(AnalysisError::InvalidPartition);
        }
        for &v in b {
            if v >= n || seen[v] {
                return Err(AnalysisError::InvalidPartition);
            }
            seen[v] = true;
        }
    }
    if !seen.into_iter().all(|s| s) {
        return Err(AnalysisError::InvalidPartition);
    }
    let m = blocks.len();
    let h = hermitian_matrix_generic::<BigInt>(d);
    let entry = |u: usize, v: usize| h[(u, v)].clone();

    let mut sums = vec![vec![Gaussian::<BigInt>::zero(); m]; m];
    let mut equitable = true;
    for (j, bj) in blocks.iter().enumerate() {
        for (k, bk) in blocks.iter().enumerate() {
            let mut block_total = Gaussian::<BigInt>::zero();
            let mut first_row_sum: Option<Gaussian<BigInt>> = None;
            for &u in bj {
                let mut row = Gaussian::<BigInt>::zero();
                for &v in bk {
                    if u != v {
                        row = row + entry(u, v);
                    }
                }
                block_total = block_total + row.clone();
                match &first_row_sum {
                    None => first_row_sum = Some(row),
                    Some(f) => {
                        if *f != row {
                            equitable = false;
                        }
                    }
                }
            }
            sums[j][k] = block_total;
        }
    }

    let to_rat = |g: &Gaussian<BigInt>| GaussianRational {
        re: BigRational::from_integer(g.re.clone()),
        im: BigRational::from_integer(g.im.clone()),
    };
    let b: Vec<Vec<GaussianRational>> = (0..m)
        .map(|j| {
            let size = BigRational::from_integer(BigInt::from(blocks[j].len()));
            (0..m)
                .map(|k| {
                    let s = to_rat(&sums[j][k]);
                    GaussianRational {
                        re: s.re / size.clone(),
                        im: s.im / size.clone(),
                    }
                })
                .collect()
        })
        .collect();

    // Eigenvalues through the similar Hermitian normalization
    // B'[j][k] = sums[j][k] / sqrt(|Vj| |Vk|).
    let mut re = vec![0.0; m * m];
    let mut im = vec![0.0; m * m];
    for j in 0..m {
        for k in 0..m {
            let scale = 1.0 / ((blocks[j].len() as f64) * (blocks[k].len() as f64)).sqrt();
            re[j * m + k] = big_to_f64(&sums[j][k].re) * scale;
            im[j * m + k] = big_to_f64(&sums[j][k].im) * scale;
        }
    }
    let quot_eigs = crate::jacobi::hermitian_eigenvalues(&re, &im, m, 1e-12)
        .expect("jacobi converges on the normalized quotient");

    // Quotient eigenvalues interlace the parent spectrum.
    let parent = eigenvalues(d, DEFAULT_TOL);
    let child = crate::hermitian::cluster_spectrum(quot_eigs.clone(), 0, DEFAULT_TOL);
    assert!(
        check_interlacing(&parent, &child)? ,
        "quotient eigenvalues must interlace"
    );

    if equitable {
        // Constant row sums are Gaussian integers; the quotient's
        // characteristic polynomial must divide the parent's exactly.
        let bm = crate::matrix::Matrix::from_fn(m, |j, k| {
            let size = BigInt::from(blocks[j].len());
            let (q, r) = num_integer::Integer::div_rem(&sums[j][k].re, &size);
            debug_assert!(r.is_zero());
            let (qi, ri) = num_integer::Integer::div_rem(&sums[j][k].im, &size);
            debug_assert!(ri.is_zero());
            Gaussian::new(q, qi)
        });
        let qp = crate::hermitian::gaussian_char_poly(&bm);
        let divides = qp
            .to_rational()
            .divides(&char_poly(d).to_rational());
        assert!(divides, "equitable quotient spectrum must embed in the parent");
    }

    Ok(PartitionQuotient {
        blocks: blocks.to_vec(),
        b,
        equitable,
        eigenvalues: quot_eigs,
    })
}

fn big_to_f64(v: &BigInt) -> f64 {
    use num_traits::ToPrimitive;
    v.to_f64().expect("block sum fits in f64")
}

// ---------------------------------------------------------------------------
// Spectral radius: the degree bound and its equality certificate.
// ---------------------------------------------------------------------------

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum CertificateKind {
    PositiveEquality,
    NegativeEquality,
    NoEquality,
}

#[derive(Clone, Debug)]
pub struct RadiusCertificate {
    pub kind: CertificateKind,
    pub partition: Option<QuaternaryPartition>,
    pub max_degree: usize,
}

/// Decides `rho(X) = Delta(Gamma(X))` exactly and, on equality, produces the
/// quaternary partition forced by label propagation from vertex 0.
pub fn radius_certificate(d: &Digraph) -> Result<RadiusCertificate, AnalysisError> {
    if !d.is_weakly_connected() {
        return Err(AnalysisError::NotWeaklyConnected);
    }
    let gamma = d.underlying_graph();
    let delta = gamma.max_degree();
    if delta == 0 {
        return Ok(RadiusCertificate {
            kind: CertificateKind::PositiveEquality,
            partition: Some(QuaternaryPartition::all(Label::One, d.order())),
            max_degree: 0,
        });
    }
    let p = char_poly(d);
    let delta_big = BigInt::from(delta as i64);
    let pos_root = p.eval(&delta_big).is_zero();
    let neg_root = p.eval(&(-delta_big)).is_zero();
    if !pos_root && !neg_root {
        return Ok(RadiusCertificate {
            kind: CertificateKind::NoEquality,
            partition: None,
            max_degree: delta,
        });
    }
    let regular = gamma.degrees().iter().all(|&x| x == delta);
    assert!(regular, "radius equality forces a regular underlying graph");
    let positive = pos_root;
    let labels =
        propagate_labels(d, positive).expect("equality certificate partition must propagate");
    let partition = QuaternaryPartition::new(labels);
    verify_certificate(d, &partition, positive, delta);
    Ok(RadiusCertificate {
        kind: if positive {
            CertificateKind::PositiveEquality
        } else {
            CertificateKind::NegativeEquality
        },
        partition: Some(partition),
        max_degree: delta,
    })
}

/// Forced label propagation along edges: in the positive case a digon copies
/// the label and an arc multiplies it by `-i`; in the negative case a digon
/// negates and an arc multiplies by `i`.
fn propagate_labels(d: &Digraph, positive: bool) -> Option<Vec<Label>> {
    let n = d.order();
    let mut values: Vec<Option<Gaussian<i64>>> = vec![None; n];
    values[0] = Some(Gaussian::one());
    let mut queue = std::collections::VecDeque::from([0usize]);
    while let Some(u) = queue.pop_front() {
        let lu = values[u].clone().unwrap();
        for v in 0..n {
            if v == u || !d.pair(u, v).is_adjacent() {
                continue;
            }
            let expected = match (d.pair(u, v), positive) {
                (PairState::Digon, true) => lu.clone(),
                (PairState::Digon, false) => -lu.clone(),
                (PairState::Fwd, true) => lu.clone() * -Gaussian::<i64>::i(),
                (PairState::Fwd, false) => lu.clone() * Gaussian::<i64>::i(),
                (PairState::Bwd, true) => lu.clone() * Gaussian::<i64>::i(),
                (PairState::Bwd, false) => lu.clone() * -Gaussian::<i64>::i(),
                (PairState::None, _) => unreachable!(),
            };
            match &values[v] {
                None => {
                    values[v] = Some(expected);
                    queue.push_back(v);
                }
                Some(actual) => {
                    if *actual != expected {
                        return None;
                    }
                }
            }
        }
    }
    let mut labels = Vec::with_capacity(n);
    for v in values {
        let g = v?;
        let label = if g == Gaussian::one() {
            Label::One
        } else if g == -Gaussian::<i64>::one() {
            Label::MinusOne
        } else if g == Gaussian::i() {
            Label::I
        } else {
            Label::MinusI
        };
        labels.push(label);
    }
    Some(labels)
}

/// Exact eigenvector check: the label vector satisfies `H z = +-Delta z`.
fn verify_certificate(d: &Digraph, p: &QuaternaryPartition, positive: bool, delta: usize) {
    let n = d.order();
    let sign: i64 = if positive { 1 } else { -1 };
    for v in 0..n {
        let mut acc = Gaussian::<i64>::zero();
        for u in 0..n {
            if u == v {
                continue;
            }
            let h = match d.pair(v, u) {
                PairState::None => continue,
                PairState::Digon => Gaussian::one(),
                PairState::Fwd => Gaussian::i(),
                PairState::Bwd => -Gaussian::<i64>::i(),
            };
            acc = acc + h * p.labels[u].value();
        }
        let want = p.labels[v].value() * Gaussian::new(sign * delta as i64, 0);
        assert_eq!(acc, want, "certificate labels must form an eigenvector");
    }
}

// ---------------------------------------------------------------------------
// Spectral radius inequalities.
// ---------------------------------------------------------------------------

#[derive(Clone, Debug, Serialize)]
pub struct RadiusInequalities {
    pub rho: f64,
    pub lambda1: f64,
    pub rho_underlying: f64,
    pub ok: bool,
}

/// `lambda1 <= rho <= 3 lambda1` and `rho <= rho(Gamma)`.
pub fn radius_inequalities(d: &Digraph) -> Result<RadiusInequalities, AnalysisError> {
    if d.arc_count() == 0 {
        return Err(AnalysisError::EmptyDigraph);
    }
    let spec = eigenvalues(d, DEFAULT_TOL);
    let rho = spec.spectral_radius();
    let lambda1 = spec.lambda_max();
    let under = eigenvalues(&d.underlying_graph().to_digraph(), DEFAULT_TOL);
    let rho_underlying = under.spectral_radius();
    let tol = 1e-9;
    let ok = lambda1 <= rho + tol && rho <= 3.0 * lambda1 + tol && rho <= rho_underlying + tol;
    Ok(RadiusInequalities {
        rho,
        lambda1,
        rho_underlying,
        ok,
    })
}

// ---------------------------------------------------------------------------
// Symmetric-spectrum sufficient conditions.
// ---------------------------------------------------------------------------

#[derive(Clone, Debug, Serialize)]
pub struct SymmetricConditions {
    pub bipartite: bool,
    pub oriented: bool,
    /// Every odd cycle of the underlying graph carries an even digon count.
    pub odd_cycle_digon_parity: bool,
    /// Exact coefficient test on the characteristic polynomial.
    pub spectrum_symmetric: bool,
}

pub fn symmetric_sufficient_conditions(d: &Digraph) -> SymmetricConditions {
    let p = char_poly(d);
    let out = SymmetricConditions {
        bipartite: d.underlying_graph().is_bipartite(),
        oriented: d.is_oriented(),
        odd_cycle_digon_parity: odd_cycle_digon_parity(d),
        spectrum_symmetric: crate::hermitian::is_symmetric_about_zero(&p, d.order()),
    };
    debug_assert!(!out.bipartite || out.spectrum_symmetric);
    debug_assert!(!out.oriented || out.spectrum_symmetric);
    debug_assert!(!out.odd_cycle_digon_parity || out.spectrum_symmetric);
    out
}

/// Exact check that every odd cycle contains an even number of digons.
///
/// Fast path: each cycle has a signature `(length, digons) mod 2`, additive
/// over symmetric differences, so if `(1,1)` is outside the span of the
/// fundamental-cycle signatures no bad cycle can exist. The span containing
/// `(1,1)` does not by itself produce a single bad simple cycle, so the slow
/// path enumerates simple cycles and decides exactly.
pub fn odd_cycle_digon_parity(d: &Digraph) -> bool {
    let g = d.underlying_graph();
    let n = g.order();
    // Spanning-forest fundamental cycle signatures.
    let mut parent = vec![usize::MAX; n];
    let mut depth_sig: Vec<(usize, usize)> = vec![(0, 0); n]; // (parity of depth, digon parity to root)
    let mut visited = vec![false; n];
    let mut span = [false; 4]; // subsets of F_2^2 present, indexed by 2*len + digons
    span[0] = true;
    let mut add_to_span = |sig: (usize, usize)| {
        let idx = 2 * sig.0 + sig.1;
        if !span[idx] {
            let current: Vec<usize> = (0..4).filter(|&k| span[k]).collect();
            for c in current {
                span[c ^ idx] = true;
            }
        }
    };
    for root in 0..n {
        if visited[root] {
            continue;
        }
        visited[root] = true;
        let mut stack = vec![root];
        while let Some(u) = stack.pop() {
            for v in g.neighbors(u) {
                let digon = usize::from(d.pair(u, v).is_digon());
                if !visited[v] {
                    visited[v] = true;
                    parent[v] = u;
                    depth_sig[v] = (
                        (depth_sig[u].0 + 1) % 2,
                        (depth_sig[u].1 + digon) % 2,
                    );
                    stack.push(v);
                } else if parent[u] != v && u < v {
                    // Fundamental cycle through tree paths to u and v.
                    let sig = (
                        (depth_sig[u].0 + depth_sig[v].0 + 1) % 2,
                        (depth_sig[u].1 + depth_sig[v].1 + digon) % 2,
                    );
                    add_to_span(sig);
                }
            }
        }
    }
    if !span[3] {
        return true;
    }
    // Exact path: enumerate simple cycles.
    for cyc in crate::sachs::cycles_of(&g) {
        if cyc.len() % 2 == 0 {
            continue;
        }
        let digons = (0..cyc.len())
            .filter(|&k| d.pair(cyc[k], cyc[(k + 1) % cyc.len()]).is_digon())
            .count();
        if digons % 2 == 1 {
            return false;
        }
    }
    true
}

// ---------------------------------------------------------------------------
// Small-spectral-radius classification.
// ---------------------------------------------------------------------------

/// Spectrum-containment classes, finest first: all eigenvalues in `{-1, 1}`,
/// inside `(-sqrt2, sqrt2)`, inside `(-sqrt3, sqrt3)`, or none of these.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum SmallRadiusClass {
    PlusMinusOne,
    InsideSqrt2,
    InsideSqrt3,
    Outside,
}

impl SmallRadiusClass {
    pub fn name(self) -> &'static str {
        match self {
            SmallRadiusClass::PlusMinusOne => "PM1",
            SmallRadiusClass::InsideSqrt2 => "LT_SQRT2",
            SmallRadiusClass::InsideSqrt3 => "LT_SQRT3",
            SmallRadiusClass::Outside => "NONE",
        }
    }
}

/// Exact spectral route on the characteristic polynomial.
pub fn small_radius_spectral(p: &CharPoly) -> SmallRadiusClass {
    if p.roots_all_plus_minus_one() {
        SmallRadiusClass::PlusMinusOne
    } else if p.roots_within_sqrt(2) {
        SmallRadiusClass::InsideSqrt2
    } else if p.roots_within_sqrt(3) {
        SmallRadiusClass::InsideSqrt3
    } else {
        SmallRadiusClass::Outside
    }
}

/// The two strongly connected two-digon digraphs on the 4-cycle sharing the
/// one-reversed 4-cycle's spectrum, found once by exhaustive search.
pub fn sqrt3_exceptional_digraphs() -> &'static Vec<Digraph> {
    static CELL: OnceLock<Vec<Digraph>> = OnceLock::new();
    CELL.get_or_init(|| {
        let target = char_poly(&Family::OneReversedCycle(4).build().unwrap());
        let mut found = Vec::new();
        let states = [PairState::Fwd, PairState::Bwd, PairState::Digon];
        let ring = [(0, 1), (1, 2), (2, 3), (3, 0)];
        for a in states {
            for b in states {
                for c in states {
                    for e in states {
                        let mut d = Digraph::empty(4);
                        for (&(u, v), s) in ring.iter().zip([a, b, c, e]) {
                            d.set_pair(u, v, s);
                        }
                        if d.digon_count() == 2
                            && d.is_strongly_connected()
                            && char_poly(&d) == target
                        {
                            if !found
                                .iter()
                                .any(|f| crate::canon::is_isomorphic(f, &d).unwrap())
                            {
                                found.push(d);
                            }
                        }
                    }
                }
            }
        }
        assert_eq!(found.len(), 2, "exactly two exceptional digraphs expected");
        found
    })
}

/// Structural route, mirroring the spectral classes component by component.
pub fn small_radius_structural(d: &Digraph) -> SmallRadiusClass {
    let comps = d.weak_components();
    if comps.iter().all(|c| c.len() == 2) {
        return SmallRadiusClass::PlusMinusOne;
    }
    if comps.iter().all(|c| c.len() <= 2) {
        return SmallRadiusClass::InsideSqrt2;
    }
    let c4t = Family::OneReversedCycle(4).build().unwrap();
    for comp in &comps {
        let sub = d.induced_subdigraph(comp).unwrap();
        let g = sub.underlying_graph();
        let n = sub.order();
        let is_path = g.edge_count() + 1 == n && g.max_degree() <= 2 && n <= 4;
        if is_path {
            continue;
        }
        let is_c4 = n == 4 && g.cycle_order().is_some();
        if is_c4 {
            let ok = crate::canon::is_isomorphic(&sub, &c4t).unwrap()
                || sqrt3_exceptional_digraphs()
                    .iter()
                    .any(|x| crate::canon::is_isomorphic(&sub, x).unwrap());
            if ok {
                continue;
            }
        }
        return SmallRadiusClass::Outside;
    }
    SmallRadiusClass::InsideSqrt3
}

/// Classifies by both routes and asserts they agree.
pub fn classify_small_radius(d: &Digraph) -> SmallRadiusClass {
    let spectral = small_radius_spectral(&char_poly(d));
    let structural = small_radius_structural(d);
    assert_eq!(
        spectral, structural,
        "spectral and structural small-radius classifications must agree"
    );
    spectral
}

// ---------------------------------------------------------------------------
// Closed-form spectra.
// ---------------------------------------------------------------------------

#[derive(Clone, Debug, Serialize)]
pub struct ClosedFormSpectrum {
    pub family: String,
    /// Eigenvalues in descending order.
    pub values: Vec<f64>,
}

/// Eigenvalues of the Hermitian matrix `i * scirc(a)` of a skew-symmetric
/// skew-circulant (`a[0] = 0`, `a[k] = a[n-k]`): for each `j`,
/// `sum_k 2 a_k sin(k (2j+1) pi / n)`, plus `(-1)^j a_{n/2}` for even `n`.
pub fn skew_circulant_hermitian_eigenvalues(a: &[f64]) -> Vec<f64> {
    let n = a.len();
    assert!(n >= 1 && a[0] == 0.0);
    for k in 1..n {
        assert_eq!(a[k], a[n - k], "coefficients must be skew-symmetric");
    }
    (0..n)
        .map(|j| {
            let mut v = 0.0;
            for (k, &ak) in a.iter().enumerate().take((n - 1) / 2 + 1).skip(1) {
                v += 2.0 * ak * ((k * (2 * j + 1)) as f64 * PI / n as f64).sin();
            }
            if n % 2 == 0 {
                v += if j % 2 == 0 { a[n / 2] } else { -a[n / 2] };
            }
            v
        })
        .collect()
}

/// Exact characteristic polynomial of the transitive tournament:
/// `sum_j (-1)^j C(n, 2j) t^{n-2j}`.
pub fn tournament_char_poly(n: usize) -> CharPoly {
    let mut coeffs = vec![BigInt::zero(); n + 1];
    let mut sign = BigInt::one();
    let mut j = 0;
    while 2 * j <= n {
        coeffs[n - 2 * j] = sign.clone() * binomial(n, 2 * j);
        sign = -sign;
        j += 1;
    }
    crate::poly::Poly::from_coeffs(coeffs)
}

fn binomial(n: usize, k: usize) -> BigInt {
    let mut b = BigInt::one();
    for i in 0..k {
        b = b * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    b
}

pub fn closed_form_spectrum(family: Family) -> Result<ClosedFormSpectrum, AnalysisError> {
    let values: Vec<f64> = match family {
        Family::DirectedCycle(n) => (0..n)
            .map(|k| 2.0 * (2.0 * PI * k as f64 / n as f64).sin())
            .collect(),
        Family::OneReversedCycle(n) => (0..n)
            .map(|j| 2.0 * ((2 * j + 1) as f64 * PI / n as f64).sin())
            .collect(),
        Family::Tournament(n) => {
            let a: Vec<f64> = (0..n).map(|k| if k == 0 { 0.0 } else { 1.0 }).collect();
            skew_circulant_hermitian_eigenvalues(&a)
        }
        Family::Xab(a, b) => {
            let disc = (1.0 + 8.0 * (a * b) as f64).sqrt();
            let mut v = vec![(-1.0 + disc) / 2.0];
            v.extend(std::iter::repeat(1.0).take(a));
            v.extend(std::iter::repeat(0.0).take(b - 1));
            v.extend(std::iter::repeat(-1.0).take(a - 1));
            v.push((-1.0 - disc) / 2.0);
            v
        }
        Family::Necklace(n) => {
            let mut v = vec![2.0; n];
            v.extend(std::iter::repeat(0.0).take(n));
            v.extend(std::iter::repeat(-2.0).take(n));
            v
        }
        Family::CompleteGraph(_) | Family::Y(_, _) => {
            let n = family_order(family);
            let mut v = vec![(n - 1) as f64];
            v.extend(std::iter::repeat(-1.0).take(n - 1));
            v
        }
        Family::K3Prime => vec![1.0, 1.0, -2.0],
        Family::K4Prime => vec![1.0, 1.0, 1.0, -3.0],
        Family::OneDigonCycle(4) => {
            let s = 2f64.sqrt();
            vec![(2.0 + s).sqrt(), (2.0 - s).sqrt(), -((2.0 - s).sqrt()), -((2.0 + s).sqrt())]
        }
        Family::OneDigonReversedCycle(5) => {
            // (t + 2)(t^2 - t - 1)^2
            let s = 5f64.sqrt();
            vec![
                (1.0 + s) / 2.0,
                (1.0 + s) / 2.0,
                (1.0 - s) / 2.0,
                (1.0 - s) / 2.0,
                -2.0,
            ]
        }
        Family::CycleGraph(n) => (0..n)
            .map(|k| 2.0 * (2.0 * PI * k as f64 / n as f64).cos())
            .collect(),
        Family::PathGraph(n) => (1..=n)
            .map(|k| 2.0 * (PI * k as f64 / (n + 1) as f64).cos())
            .collect(),
        Family::StarGraph(n) => {
            let mut v = vec![((n - 1) as f64).sqrt()];
            v.extend(std::iter::repeat(0.0).take(n.saturating_sub(2)));
            if n >= 2 {
                v.push(-((n - 1) as f64).sqrt());
            }
            v
        }
        Family::Empty(n) => vec![0.0; n],
        other => return Err(AnalysisError::UnknownClosedForm(other.to_string())),
    };
    let mut values = values;
    values.sort_by(|a, b| b.partial_cmp(a).unwrap());
    Ok(ClosedFormSpectrum {
        family: family.to_string(),
        values,
    })
}

fn family_order(family: Family) -> usize {
    match family {
        Family::CompleteGraph(n) => n,
        Family::Y(a, b) => a + b,
        _ => 0,
    }
}

/// Compares a closed form against the numeric spectrum of the built family.
pub fn closed_form_matches(family: Family, tol: f64) -> Result<bool, AnalysisError> {
    let closed = closed_form_spectrum(family)?;
    let d = family
        .build()
        .map_err(|e| AnalysisError::UnknownClosedForm(e.to_string()))?;
    let numeric = eigenvalues_raw(&d);
    if numeric.len() != closed.values.len() {
        return Ok(false);
    }
    Ok(numeric
        .iter()
        .zip(&closed.values)
        .all(|(a, b)| (a - b).abs() < tol))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::int_poly;

    #[test]
    fn interlacing_on_vertex_deletion() {
        let d = Family::K4Prime.build().unwrap();
        let parent = eigenvalues(&d, 1e-9);
        for v in 0..4 {
            let child = eigenvalues(&d.delete_vertex(v), 1e-9);
            assert!(check_interlacing(&parent, &child).unwrap());
        }
        // Equal spectra trivially interlace.
        assert!(check_interlacing(&parent, &parent).unwrap());
    }

    #[test]
    fn interlacing_rejects_violations() {
        let digon = eigenvalues(&Family::PathGraph(2).build().unwrap(), 1e-9);
        let sqrt2 = Spectrum {
            eigenvalues: vec![2f64.sqrt()],
            multiplicities: vec![1],
            zero_mult: 0,
            tolerance: 1e-9,
        };
        assert!(!check_interlacing(&digon, &sqrt2).unwrap());
        assert!(check_interlacing(&sqrt2, &digon).is_err());
    }

    #[test]
    fn eta_bounds_on_examples() {
        // Three disjoint digons.
        let mut d = Digraph::empty(6);
        for k in 0..3 {
            d.add_digon(2 * k, 2 * k + 1);
        }
        let b = eta_bounds_check(&d);
        assert_eq!(b.independence_number, 3);
        assert_eq!(b.eta_plus, 3);
        assert!(b.digon_free_bound_ok && b.independence_bound_ok);

        let t5 = Family::Tournament(5).build().unwrap();
        let b = eta_bounds_check(&t5);
        assert_eq!(b.digon_free_size, 5);
        assert!(b.eta_plus >= 3 && b.eta_minus >= 3);
        assert!(b.digon_free_bound_ok);

        let k3 = Family::CompleteGraph(3).build().unwrap();
        let b = eta_bounds_check(&k3);
        assert_eq!(b.independence_number, 1);
        assert_eq!(b.eta_plus, 1);
        assert!(b.independence_bound_ok);
    }

    #[test]
    fn tournament_bound_on_small_cases() {
        let t3 = tournament_bound_check(&Family::Tournament(3).build().unwrap()).unwrap();
        assert!((t3.bound - 3f64.sqrt()).abs() < 1e-12);
        assert!(t3.tight);

        let d4 = tournament_bound_check(&Family::DirectedCycle(4).build().unwrap()).unwrap();
        assert!((d4.lambda1 - 2.0).abs() < 1e-9);
        assert!(!d4.tight);

        assert!(matches!(
            tournament_bound_check(&Family::K3Prime.build().unwrap()),
            Err(AnalysisError::HasDigon)
        ));
    }

    #[test]
    fn tournament_bound_tight_under_local_reversal() {
        let t5 = Family::Tournament(5).build().unwrap();
        let switched = crate::switching::local_reversal(&t5, &[0, 3]).unwrap();
        let r = tournament_bound_check(&switched).unwrap();
        assert!(r.tight);
    }

    #[test]
    fn quotient_of_xab_blocks() {
        let d = Family::Xab(2, 3).build().unwrap();
        let blocks = vec![vec![0, 1], vec![2, 3], vec![4, 5, 6]];
        let q = quotient(&d, &blocks).unwrap();
        assert!(q.equitable);
        let rat = |x: i64| BigRational::from_integer(BigInt::from(x));
        // B = [[0, 1, 3i], [1, 0, -3i], [-2i, 2i, 0]]
        assert_eq!(q.b[0][1], Gaussian::new(rat(1), rat(0)));
        assert_eq!(q.b[0][2], Gaussian::new(rat(0), rat(3)));
        assert_eq!(q.b[1][2], Gaussian::new(rat(0), rat(-3)));
        assert_eq!(q.b[2][0], Gaussian::new(rat(0), rat(-2)));
        // Quotient eigenvalues: 1 and (-1 +- sqrt(1 + 8ab)) / 2 with ab = 6.
        let disc = 49f64.sqrt();
        let want = [(-1.0 + disc) / 2.0, 1.0, (-1.0 - disc) / 2.0];
        for (g, w) in q.eigenvalues.iter().zip(want) {
            assert!((g - w).abs() < 1e-9);
        }
    }

    #[test]
    fn quotient_singletons_and_one_block() {
        let d = Family::DirectedCycle(3).build().unwrap();
        let singletons = vec![vec![0], vec![1], vec![2]];
        let q = quotient(&d, &singletons).unwrap();
        assert!(q.equitable);
        // One block: eulerian asymmetric part with empty symmetric part
        // averages to zero row sums.
        let q = quotient(&d, &[vec![0, 1, 2]]).unwrap();
        assert!(q.equitable);
        assert!(q.b[0][0].is_zero());
        let k3 = Family::CompleteGraph(3).build().unwrap();
        let q = quotient(&k3, &[vec![0, 1, 2]]).unwrap();
        assert!(q.equitable);
        assert_eq!(q.eigenvalues.len(), 1);
        assert!((q.eigenvalues[0] - 2.0).abs() < 1e-9);
        assert!(quotient(&k3, &[vec![0, 1]]).is_err());
        assert!(quotient(&k3, &[vec![0, 1], vec![1, 2]]).is_err());
    }

    #[test]
    fn radius_certificates() {
        let kn = Family::CompleteGraph(4).build().unwrap();
        let c = radius_certificate(&kn).unwrap();
        assert_eq!(c.kind, CertificateKind::PositiveEquality);
        assert!(c
            .partition
            .unwrap()
            .labels
            .iter()
            .all(|&l| l == Label::One));

        let k4p = Family::K4Prime.build().unwrap();
        let c = radius_certificate(&k4p).unwrap();
        assert_eq!(c.kind, CertificateKind::NegativeEquality);

        let c3t = Family::OneReversedCycle(3).build().unwrap();
        let c = radius_certificate(&c3t).unwrap();
        assert_eq!(c.kind, CertificateKind::NoEquality);

        let d4 = Family::DirectedCycle(4).build().unwrap();
        let c = radius_certificate(&d4).unwrap();
        assert_eq!(c.kind, CertificateKind::PositiveEquality);

        let mut disconnected = Digraph::empty(4);
        disconnected.add_arc(0, 1);
        assert!(matches!(
            radius_certificate(&disconnected),
            Err(AnalysisError::NotWeaklyConnected)
        ));
    }

    #[test]
    fn radius_inequalities_on_families() {
        for fam in [
            Family::K4Prime,
            Family::Xab(2, 3),
            Family::Tournament(6),
            Family::CompleteGraph(5),
        ] {
            let r = radius_inequalities(&fam.build().unwrap()).unwrap();
            assert!(r.ok, "{fam:?}: {r:?}");
        }
        assert!(matches!(
            radius_inequalities(&Digraph::empty(3)),
            Err(AnalysisError::EmptyDigraph)
        ));
    }

    #[test]
    fn symmetric_conditions_cases() {
        // Non-oriented, non-bipartite, parity fails, yet symmetric.
        let mut d = Digraph::empty(4);
        d.add_arc(0, 1);
        d.add_arc(1, 2);
        d.add_digon(2, 3);
        d.add_arc(0, 3);
        d.add_arc(1, 3);
        d.add_arc(2, 0);
        let c = symmetric_sufficient_conditions(&d);
        assert!(!c.bipartite && !c.oriented && !c.odd_cycle_digon_parity);
        assert!(c.spectrum_symmetric);

        let c = symmetric_sufficient_conditions(&Family::OneReversedCycle(3).build().unwrap());
        assert!(c.oriented && c.spectrum_symmetric && !c.bipartite);

        let c = symmetric_sufficient_conditions(&Family::CycleGraph(6).build().unwrap());
        assert!(c.bipartite && c.spectrum_symmetric);

        // K3' has an odd cycle with one digon: parity fails, not symmetric.
        let c = symmetric_sufficient_conditions(&Family::K3Prime.build().unwrap());
        assert!(!c.odd_cycle_digon_parity && !c.spectrum_symmetric);

        // All-digon odd cycle with a pendant digon path: odd cycles have
        // even digon count only if... C3 all-digon: 3 digons, odd: fails.
        let c = symmetric_sufficient_conditions(&Family::CompleteGraph(3).build().unwrap());
        assert!(!c.odd_cycle_digon_parity && !c.spectrum_symmetric);

        // Oriented triangle with two digons on a 5-cycle: construct a
        // 5-cycle with exactly two digons: parity holds.
        let mut c5 = Family::DirectedCycle(5).build().unwrap();
        c5.add_digon(0, 1);
        c5.add_digon(2, 3);
        let c = symmetric_sufficient_conditions(&c5);
        assert!(c.odd_cycle_digon_parity);
        assert!(c.spectrum_symmetric);
    }

    #[test]
    fn small_radius_classification_cases() {
        let mut three_digons = Digraph::empty(6);
        for k in 0..3 {
            three_digons.add_digon(2 * k, 2 * k + 1);
        }
        assert_eq!(
            classify_small_radius(&three_digons),
            SmallRadiusClass::PlusMinusOne
        );

        let mut mixed = Digraph::empty(5);
        mixed.add_arc(0, 1);
        mixed.add_digon(2, 3);
        assert_eq!(classify_small_radius(&mixed), SmallRadiusClass::InsideSqrt2);

        let c4t = Family::OneReversedCycle(4).build().unwrap();
        assert_eq!(classify_small_radius(&c4t), SmallRadiusClass::InsideSqrt3);

        let p4 = Family::PathGraph(4).build().unwrap();
        assert_eq!(classify_small_radius(&p4), SmallRadiusClass::InsideSqrt3);

        let p5 = Family::PathGraph(5).build().unwrap();
        assert_eq!(classify_small_radius(&p5), SmallRadiusClass::Outside);

        let k3p = Family::K3Prime.build().unwrap();
        assert_eq!(classify_small_radius(&k3p), SmallRadiusClass::Outside);

        assert_eq!(
            classify_small_radius(&Digraph::empty(3)),
            SmallRadiusClass::InsideSqrt2
        );
    }

    #[test]
    fn exceptional_sqrt3_digraphs_found() {
        let ex = sqrt3_exceptional_digraphs();
        assert_eq!(ex.len(), 2);
        for d in ex {
            assert_eq!(d.digon_count(), 2);
            assert!(d.is_strongly_connected());
            assert_eq!(char_poly(d), int_poly(&[4, 0, -4, 0, 1]));
            assert_eq!(classify_small_radius(d), SmallRadiusClass::InsideSqrt3);
        }
    }

    #[test]
    fn closed_forms_match_numerics() {
        for fam in [
            Family::DirectedCycle(6),
            Family::DirectedCycle(7),
            Family::OneReversedCycle(6),
            Family::OneReversedCycle(9),
            Family::Tournament(4),
            Family::Tournament(7),
            Family::Xab(1, 3),
            Family::Xab(3, 2),
            Family::Necklace(4),
            Family::CompleteGraph(5),
            Family::Y(2, 3),
            Family::K3Prime,
            Family::K4Prime,
            Family::OneDigonCycle(4),
            Family::OneDigonReversedCycle(5),
            Family::CycleGraph(5),
            Family::PathGraph(6),
            Family::StarGraph(5),
        ] {
            assert!(closed_form_matches(fam, 1e-9).unwrap(), "{fam:?}");
        }
        assert!(closed_form_spectrum(Family::OneDigonCycle(6)).is_err());
    }

    #[test]
    fn directed_cycle_six_expected_values() {
        let c = closed_form_spectrum(Family::DirectedCycle(6)).unwrap();
        let r3 = 3f64.sqrt();
        let want = [r3, r3, 0.0, 0.0, -r3, -r3];
        for (g, w) in c.values.iter().zip(want) {
            assert!((g - w).abs() < 1e-12);
        }
        let c = closed_form_spectrum(Family::OneReversedCycle(6)).unwrap();
        let want = [2.0, 1.0, 1.0, -1.0, -1.0, -2.0];
        for (g, w) in c.values.iter().zip(want) {
            assert!((g - w).abs() < 1e-12);
        }
    }

    #[test]
    fn tournament_char_poly_formula() {
        assert_eq!(tournament_char_poly(3), int_poly(&[0, -3, 0, 1]));
        assert_eq!(tournament_char_poly(4), int_poly(&[1, 0, -6, 0, 1]));
        for n in 1..=8 {
            let d = Family::Tournament(n).build().unwrap();
            assert_eq!(char_poly(&d), tournament_char_poly(n), "T_{n}");
        }
    }
}
