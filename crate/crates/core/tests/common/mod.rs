//! Brute-force oracles shared by the integration tests. Deliberately naive:
//! nothing here reuses the library's own ideal or graph algorithms.

#![allow(dead_code)]

use std::collections::BTreeSet;

use amalgam_zdg::{parse_family, parse_ring, AmalgamRing, Diameter, Elem, FiniteRing, ZdGraph};

/// `Z_n` for 2..=16, `Z_a x Z_b` for 2 <= a <= b <= 4, and `Z2^3`.
pub fn sweep_family() -> Vec<String> {
    parse_family("Z2..Z16,Z2xZ2..Z4xZ4,Z2xZ2xZ2").unwrap()
}

/// Every ring of order at most 8 reachable from the spec language, plus
/// every duplication `R⋈I` of order at most 8.
pub fn small_rings() -> Vec<FiniteRing> {
    let mut out = Vec::new();
    for spec in parse_family("Z2..Z8,Z2xZ2,Z2xZ3,Z2xZ4,Z2xZ2xZ2").unwrap() {
        let r = parse_ring(&spec).unwrap();
        for i in r.all_ideals() {
            if r.order() * i.len() <= 8 && !i.is_zero() {
                out.push(AmalgamRing::amalgamated_duplication(&r, &i).unwrap().ring().clone());
            }
        }
        out.push(r);
    }
    out
}

/// Scans all `2^n` subsets for those closed under `+`, `-` and `R·`.
pub fn brute_force_ideals(r: &FiniteRing) -> BTreeSet<Vec<usize>> {
    let n = r.order();
    assert!(n <= 12, "subset scan is exponential");
    let mut out = BTreeSet::new();
    for mask in 0u32..(1 << n) {
        let members: Vec<usize> = (0..n).filter(|&k| mask >> k & 1 == 1).collect();
        let has = |e: Elem| mask >> e.index() & 1 == 1;
        if !has(r.zero()) {
            continue;
        }
        let closed = members.iter().all(|&a| {
            let a = Elem(a);
            has(r.neg(a))
                && members.iter().all(|&b| has(r.add(a, Elem(b))))
                && r.elements().all(|s| has(r.mul(s, a)))
        });
        if closed {
            out.insert(members);
        }
    }
    out
}

/// All-pairs shortest paths by Floyd–Warshall. `None` when disconnected.
pub fn floyd_warshall_diameter(g: &ZdGraph) -> Option<Diameter> {
    let n = g.vertex_count();
    if n == 0 {
        return Some(Diameter::Empty);
    }
    const INF: usize = usize::MAX / 4;
    let mut d = vec![vec![INF; n]; n];
    for u in 0..n {
        d[u][u] = 0;
        for v in 0..n {
            if g.adjacent(u, v) {
                d[u][v] = 1;
            }
        }
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if d[i][k] + d[k][j] < d[i][j] {
                    d[i][j] = d[i][k] + d[k][j];
                }
            }
        }
    }
    let max = d.iter().flatten().copied().max().unwrap();
    (max < INF).then_some(Diameter::Finite(max))
}

/// Length of the shortest simple cycle, found by enumerating every simple
/// path from each start vertex through higher-numbered vertices only.
/// Paths already as long as the best cycle are not extended.
pub fn enumerated_girth(g: &ZdGraph) -> Option<usize> {
    fn walk(g: &ZdGraph, start: usize, at: usize, len: usize, on: &mut Vec<bool>, best: &mut Option<usize>) {
        for v in 0..g.vertex_count() {
            if !g.adjacent(at, v) {
                continue;
            }
            if v == start && len >= 3 {
                *best = Some(best.map_or(len, |b| b.min(len)));
            } else if v > start && !on[v] && best.is_none_or(|b| len < b) {
                on[v] = true;
                walk(g, start, v, len + 1, on, best);
                on[v] = false;
            }
        }
    }
    let n = g.vertex_count();
    let mut best = None;
    for s in 0..n {
        let mut on = vec![false; n];
        on[s] = true;
        walk(g, s, s, 1, &mut on, &mut best);
    }
    best
}

/// Every graph arising in the sweep: `Γ(R)` and `Γ(R⋈I)` for each nonzero `I`.
pub fn sweep_graphs() -> Vec<(String, ZdGraph)> {
    let mut out = Vec::new();
    for spec in sweep_family() {
        let r = parse_ring(&spec).unwrap();
        out.push((spec.clone(), ZdGraph::build(&r)));
        for i in r.all_ideals().into_iter().filter(|i| !i.is_zero()) {
            let a = AmalgamRing::amalgamated_duplication(&r, &i).unwrap();
            let name = format!("{spec}⋈{}", r.format_set(i.members()));
            out.push((name, ZdGraph::build(a.ring())));
        }
    }
    out
}
