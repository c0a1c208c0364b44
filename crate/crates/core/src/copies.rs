//! Enumeration of copies of a pattern graph inside a host graph.
//!
//! A copy is the vertex image of an injective homomorphism `H → G`; the
//! copy need not be induced.

use std::collections::BTreeSet;

use crate::graph::Graph;

/// Every vertex set of `g` that is the image of an injective homomorphism of
/// `h`, each listed once, sorted lexicographically by sorted vertex list.
pub fn enumerate_copies(h: &Graph, g: &Graph) -> Vec<Vec<usize>> {
    if h.order() > g.order() {
        return Vec::new();
    }
    let order = search_order(h);
    let mut images = BTreeSet::new();
    let mut map = vec![usize::MAX; h.order()];
    let mut used = vec![false; g.order()];
    extend(h, g, &order, 0, &mut map, &mut used, &mut images);
    images.into_iter().collect()
}

/// Each vertex after the first is chosen adjacent to an earlier one where
/// possible so edge checks prune early.
fn search_order(h: &Graph) -> Vec<usize> {
    let mut order = Vec::with_capacity(h.order());
    let mut placed = vec![false; h.order()];
    while order.len() < h.order() {
        let next = (0..h.order())
            .filter(|&v| !placed[v])
            .max_by_key(|&v| {
                let back = h.neighbors(v).filter(|&u| placed[u]).count();
                (back, h.degree(v), std::cmp::Reverse(v))
            })
            .expect("unplaced vertex exists");
        placed[next] = true;
        order.push(next);
    }
    order
}

fn extend(
    h: &Graph,
    g: &Graph,
    order: &[usize],
    depth: usize,
    map: &mut [usize],
    used: &mut [bool],
    images: &mut BTreeSet<Vec<usize>>,
) {
    if depth == order.len() {
        let mut image = map.to_vec();
        image.sort_unstable();
        images.insert(image);
        return;
    }
    let v = order[depth];
    for target in 0..g.order() {
        if used[target] {
            continue;
        }
        let consistent = h
            .neighbors(v)
            .all(|u| map[u] == usize::MAX || g.has_edge(map[u], target));
        if consistent {
            map[v] = target;
            used[target] = true;
            extend(h, g, order, depth + 1, map, used, images);
            used[target] = false;
            map[v] = usize::MAX;
        }
    }
}
