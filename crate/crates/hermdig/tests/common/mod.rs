use hermdig::digraph::{Digraph, PairState};
use rand::Rng;

pub fn random_digraph(rng: &mut impl Rng, n: usize) -> Digraph {
    let states = [
        PairState::None,
        PairState::Fwd,
        PairState::Bwd,
        PairState::Digon,
    ];
    let mut d = Digraph::empty(n);
    for j in 1..n {
        for i in 0..j {
            d.set_pair(i, j, states[rng.gen_range(0..4)]);
        }
    }
    d
}
