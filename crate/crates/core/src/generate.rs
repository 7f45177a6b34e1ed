//! Seeded random hypergraphs and the fixed instance families used by the
//! check harness.

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::families;
use crate::hypergraph::Hypergraph;
use crate::power::{power_hypergraph, PowerParams};

pub const DEFAULT_ATTEMPTS: usize = 10_000;

/// Default corpus: 500 instances, `n ≤ 10`, `m ≤ 7`, cardinalities 2 to 5.
pub const CORPUS_SEED: u64 = 42;
pub const CORPUS_SIZE: usize = 500;
pub const CORPUS_MAX_N: usize = 10;
pub const CORPUS_MAX_M: usize = 7;
pub const CORPUS_MAX_CARD: usize = 5;

/// Simple connected hypergraph on `n` vertices labeled `1..=n` with `m`
/// edges of cardinality `2..=max_card`, by rejection sampling.
pub fn random_hypergraph(n: usize, m: usize, max_card: usize, seed: u64) -> Result<Hypergraph> {
    random_hypergraph_with_attempts(n, m, max_card, seed, DEFAULT_ATTEMPTS)
}

pub fn random_hypergraph_with_attempts(
    n: usize,
    m: usize,
    max_card: usize,
    seed: u64,
    attempts: usize,
) -> Result<Hypergraph> {
    if n < 2 {
        return Err(Error::GeneratorParams(format!("n = {n}, need n >= 2")));
    }
    if m < 1 {
        return Err(Error::GeneratorParams("m = 0, need m >= 1".into()));
    }
    if max_card < 2 {
        return Err(Error::GeneratorParams(format!(
            "max card = {max_card}, need max card >= 2"
        )));
    }
    let top = max_card.min(n);
    let labels: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..attempts {
        let edges: Vec<Vec<usize>> = (0..m)
            .map(|_| {
                let c = rng.gen_range(2..=top);
                sample(&mut rng, n, c).into_vec()
            })
            .collect();
        let h = Hypergraph::from_raw(labels.clone(), edges);
        if h.validate().is_empty() && h.is_connected() {
            return Ok(h);
        }
    }
    Err(Error::GeneratorExhausted {
        n,
        m,
        max_card,
        attempts,
    })
}

/// `size` instances drawn from sub-seeds of `seed`. Each draws `m`,
/// a cardinality cap and an `n` small enough for a connected instance to
/// exist; parameter sets the sampler gives up on are redrawn.
pub fn corpus(seed: u64, size: usize) -> Vec<Hypergraph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(size);
    while out.len() < size {
        let m = rng.gen_range(1..=CORPUS_MAX_M);
        let c = rng.gen_range(2..=CORPUS_MAX_CARD);
        let n_max = (m * (c - 1) + 1).min(CORPUS_MAX_N);
        let n = rng.gen_range(2..=n_max);
        let sub = rng.gen::<u64>();
        if let Ok(h) = random_hypergraph_with_attempts(n, m, c, sub, 2_000) {
            out.push(h);
        }
    }
    out
}

pub fn default_corpus() -> Vec<Hypergraph> {
    corpus(CORPUS_SEED, CORPUS_SIZE)
}

fn skew_bases() -> Vec<Hypergraph> {
    vec![
        families::cycle(3),
        families::cycle(4),
        families::cycle(5),
        families::cycle(6),
        families::cycle(7),
        families::complete_uniform(4, 2),
        families::complete_uniform(5, 2),
        families::complete_uniform(4, 3),
        families::fano_plane(),
        families::petersen(),
        families::cube(),
        families::complete_bipartite(2, 3),
        families::complete_bipartite(3, 3),
        families::complete_bipartite(2, 5),
        families::complete_bipartite(3, 4),
        families::collar_21(),
        families::single_edge(),
    ]
}

/// Adds `pads[i]` fresh degree-one vertices to edge `i`.
fn pad_edges(h: &Hypergraph, pads: &[usize]) -> Hypergraph {
    let mut labels = h.labels().to_vec();
    let mut edges = h.edges().to_vec();
    for (i, (e, &p)) in edges.iter_mut().zip(pads).enumerate() {
        for j in 0..p {
            e.push(labels.len());
            labels.push(format!("_skew_{i}_{j}"));
        }
    }
    Hypergraph::from_raw(labels, edges)
}

/// 50 skew edge-regular hypergraphs, most of them non-uniform: regular
/// uniform graphs and hypergraphs, complete bipartite graphs (regular or
/// not), each bare and with random numbers of degree-one vertices added
/// per edge, plus power hypergraphs of regular bases.
pub fn skew_edge_regular_family() -> Vec<Hypergraph> {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let bases = skew_bases();
    let mut out = bases.clone();
    'outer: for round in 0..3 {
        for b in &bases {
            if out.len() == 45 {
                break 'outer;
            }
            let pads: Vec<usize> = (0..b.edge_count())
                .map(|_| rng.gen_range(0..=round + 1))
                .collect();
            out.push(pad_edges(b, &pads));
        }
    }
    for (base, t, k) in [
        (families::cycle(4), 2, 5),
        (families::fano_plane(), 2, 7),
        (families::complete_uniform(4, 2), 3, 6),
        (families::complete_bipartite(2, 3), 1, 4),
        (families::petersen(), 2, 4),
    ] {
        out.push(power_hypergraph(&base, PowerParams::new(t, k)).expect("k >= rt"));
    }
    out
}

/// 20 connected uniform edge-regular hypergraphs, where both spectral
/// radius bounds are attained.
pub fn equality_cases() -> Vec<(String, Hypergraph)> {
    let power =
        |h: Hypergraph, t, k| power_hypergraph(&h, PowerParams::new(t, k)).expect("k >= rt");
    vec![
        ("C3".into(), families::cycle(3)),
        ("C4".into(), families::cycle(4)),
        ("C5".into(), families::cycle(5)),
        ("C6".into(), families::cycle(6)),
        ("K4".into(), families::complete_uniform(4, 2)),
        ("K5".into(), families::complete_uniform(5, 2)),
        ("K4^(3)".into(), families::complete_uniform(4, 3)),
        ("K5^(3)".into(), families::complete_uniform(5, 3)),
        ("K6^(3)".into(), families::complete_uniform(6, 3)),
        ("Fano".into(), families::fano_plane()),
        ("Petersen".into(), families::petersen()),
        ("Q3".into(), families::cube()),
        ("K3,3".into(), families::complete_bipartite(3, 3)),
        ("K4,4".into(), families::complete_bipartite(4, 4)),
        ("collar-21".into(), families::collar_21()),
        ("K2".into(), families::single_edge()),
        ("C4^3_1".into(), power(families::cycle(4), 1, 3)),
        ("Fano^6_2".into(), power(families::fano_plane(), 2, 6)),
        (
            "K4^5_2".into(),
            power(families::complete_uniform(4, 2), 2, 5),
        ),
        ("Petersen^3_1".into(), power(families::petersen(), 1, 3)),
    ]
}
