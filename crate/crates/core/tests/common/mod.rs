#![allow(dead_code)]

use graphtile::Graph;
use graphtile::Rational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut r = ChaCha8Rng::seed_from_u64(seed);
    r.set_stream(stream);
    r
}

/// Every labelled graph on `n` vertices, edges indexed by pairs `(u, v)`, `u < v`.
pub fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    let m = pairs.len();
    (0u64..(1 << m)).map(move |mask| {
        Graph::new(
            n,
            pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask & (1 << i) != 0)
                .map(|(_, &e)| e),
        )
        .unwrap()
    })
}

pub fn random_graph(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let edges: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect::<Vec<_>>()
        .into_iter()
        .filter(|_| rng.gen_bool(p))
        .collect();
    Graph::new(n, edges).unwrap()
}

pub fn random_permutation(rng: &mut impl Rng, n: usize) -> Vec<usize> {
    use rand::seq::SliceRandom;
    let mut p: Vec<usize> = (0..n).collect();
    p.shuffle(rng);
    p
}

/// Patterns used across the suites.
pub fn patterns() -> Vec<(&'static str, Graph)> {
    vec![
        ("K1", Graph::empty(1)),
        ("K2", Graph::complete(2)),
        ("P3", Graph::path(3)),
        ("K3", Graph::complete(3)),
        ("K13", Graph::star(3)),
        ("C4", Graph::cycle(4)),
        ("K4", Graph::complete(4)),
    ]
}

/// Hosts on at most seven vertices: named graphs plus seeded random ones.
pub fn small_hosts() -> Vec<(String, Graph)> {
    let mut hosts: Vec<(String, Graph)> = vec![
        ("K2".into(), Graph::complete(2)),
        ("P3".into(), Graph::path(3)),
        ("K3".into(), Graph::complete(3)),
        ("C4".into(), Graph::cycle(4)),
        ("K4".into(), Graph::complete(4)),
        ("C5".into(), Graph::cycle(5)),
        ("K5".into(), Graph::complete(5)),
        ("C6".into(), Graph::cycle(6)),
        ("K6".into(), Graph::complete(6)),
        ("K33".into(), Graph::complete_multipartite(&[3, 3])),
        ("K222".into(), Graph::complete_multipartite(&[2, 2, 2])),
        ("K322".into(), Graph::complete_multipartite(&[3, 2, 2])),
        ("C7".into(), Graph::cycle(7)),
        ("P7".into(), Graph::path(7)),
        ("K7".into(), Graph::complete(7)),
        (
            "K3+K3".into(),
            Graph::complete(3).disjoint_union(&Graph::complete(3)),
        ),
        ("star6".into(), Graph::star(6)),
    ];
    let mut r = rng(2024, 0);
    for i in 0..24 {
        let n = 3 + i % 5;
        let p = [0.35, 0.5, 0.7][i % 3];
        hosts.push((format!("G(n={n},p={p})#{i}"), random_graph(&mut r, n, p)));
    }
    hosts
}

/// Naive copy oracle: every `v(H)`-subset, every bijection onto `V(H)`.
pub fn naive_copies(h: &Graph, g: &Graph) -> Vec<Vec<usize>> {
    let k = h.order();
    let n = g.order();
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    for mask in 0u32..(1 << n) {
        if mask.count_ones() as usize != k {
            continue;
        }
        let s: Vec<usize> = (0..n).filter(|v| mask & (1 << v) != 0).collect();
        let mut perm: Vec<usize> = (0..k).collect();
        let mut found = false;
        loop {
            // vertex i of H goes to s[perm[i]]
            if h.edges()
                .iter()
                .all(|&(a, b)| g.has_edge(s[perm[a]], s[perm[b]]))
            {
                found = true;
                break;
            }
            if !next_permutation(&mut perm) {
                break;
            }
        }
        if found {
            out.push(s);
        }
    }
    out.sort();
    out
}

pub fn next_permutation(p: &mut [usize]) -> bool {
    let n = p.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// Largest number of pairwise-disjoint sets, by exhaustive recursion.
pub fn max_disjoint_subfamily(sets: &[Vec<usize>], universe: usize) -> usize {
    fn go(sets: &[Vec<usize>], i: usize, used: &mut Vec<bool>) -> usize {
        if i == sets.len() {
            return 0;
        }
        let skip = go(sets, i + 1, used);
        if sets[i].iter().any(|&v| used[v]) {
            return skip;
        }
        for &v in &sets[i] {
            used[v] = true;
        }
        let take = 1 + go(sets, i + 1, used);
        for &v in &sets[i] {
            used[v] = false;
        }
        skip.max(take)
    }
    go(sets, 0, &mut vec![false; universe])
}

pub fn r(p: i64, q: i64) -> Rational {
    graphtile::rational::ratio(p, q)
}
