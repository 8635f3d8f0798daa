//! Metric graph utilities: components, shortest paths and minimum cycle bases.

use std::cmp::Reverse;
use std::collections::{BTreeSet, BinaryHeap};

use num_traits::Zero;

use crate::algebra::Rat;

/// Number of connected components (isolated vertices count).
pub fn components(n: usize, edges: &[(usize, usize)]) -> usize {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        let mut y = x;
        while p[y] != r {
            let nx = p[y];
            p[y] = r;
            y = nx;
        }
        r
    }
    let mut c = n;
    for &(a, b) in edges {
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        if ra != rb {
            parent[ra] = rb;
            c -= 1;
        }
    }
    c
}

pub fn first_betti_of(n: usize, edges: &[(usize, usize)]) -> usize {
    edges.len() + components(n, edges) - n
}

/// Dijkstra from `src`; returns distances and the predecessor edge of each vertex.
pub fn shortest_paths(n: usize, edges: &[(usize, usize, Rat)], src: usize) -> (Vec<Option<Rat>>, Vec<Option<usize>>) {
    let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
    for (i, (a, b, _)) in edges.iter().enumerate() {
        adj[*a].push((*b, i));
        adj[*b].push((*a, i));
    }
    let mut dist: Vec<Option<Rat>> = vec![None; n];
    let mut pred: Vec<Option<usize>> = vec![None; n];
    let mut done = vec![false; n];
    let mut heap = BinaryHeap::new();
    dist[src] = Some(Rat::zero());
    heap.push(Reverse((Rat::zero(), src)));
    while let Some(Reverse((d, v))) = heap.pop() {
        if done[v] {
            continue;
        }
        done[v] = true;
        for &(w, ei) in &adj[v] {
            let nd = &d + &edges[ei].2;
            let better = match &dist[w] {
                None => true,
                Some(old) => nd < *old,
            };
            if better && !done[w] {
                dist[w] = Some(nd.clone());
                pred[w] = Some(ei);
                heap.push(Reverse((nd, w)));
            }
        }
    }
    (dist, pred)
}

fn tree_path(edges: &[(usize, usize, Rat)], pred: &[Option<usize>], mut v: usize) -> Vec<usize> {
    let mut path = Vec::new();
    while let Some(ei) = pred[v] {
        path.push(ei);
        let (a, b, _) = &edges[ei];
        v = if *a == v { *b } else { *a };
    }
    path
}

/// Minimum-weight cycle basis (Horton candidates, greedy GF(2) independence).
/// Each cycle is returned with its total length and sorted edge indices.
pub fn min_cycle_basis(n: usize, edges: &[(usize, usize, Rat)]) -> Vec<(Rat, Vec<usize>)> {
    let simple: Vec<(usize, usize)> = edges.iter().map(|e| (e.0, e.1)).collect();
    let rank = first_betti_of(n, &simple);
    if rank == 0 {
        return Vec::new();
    }
    let mut cands: BTreeSet<(Rat, Vec<usize>)> = BTreeSet::new();
    for v in 0..n {
        let (dist, pred) = shortest_paths(n, edges, v);
        for (ei, (a, b, _)) in edges.iter().enumerate() {
            if dist[*a].is_none() || dist[*b].is_none() {
                continue;
            }
            let mut set: BTreeSet<usize> = BTreeSet::new();
            for e in tree_path(edges, &pred, *a).into_iter().chain(tree_path(edges, &pred, *b)).chain([ei]) {
                if !set.insert(e) {
                    set.remove(&e);
                }
            }
            if set.is_empty() {
                continue;
            }
            let w = set.iter().fold(Rat::zero(), |acc, &e| acc + &edges[e].2);
            cands.insert((w, set.into_iter().collect()));
        }
    }
    // greedy independence over GF(2) with a reduced echelon basis of bit vectors
    let words = edges.len().div_ceil(64);
    let mut pivots: Vec<(usize, Vec<u64>)> = Vec::new();
    let mut out = Vec::new();
    for (w, cyc) in cands {
        let mut bits = vec![0u64; words];
        for &e in &cyc {
            bits[e / 64] ^= 1 << (e % 64);
        }
        for (p, row) in &pivots {
            if bits[p / 64] >> (p % 64) & 1 == 1 {
                for (x, y) in bits.iter_mut().zip(row) {
                    *x ^= y;
                }
            }
        }
        if let Some(p) = (0..edges.len()).find(|&p| bits[p / 64] >> (p % 64) & 1 == 1) {
            for (_, row) in pivots.iter_mut() {
                if row[p / 64] >> (p % 64) & 1 == 1 {
                    for (x, y) in row.iter_mut().zip(&bits) {
                        *x ^= y;
                    }
                }
            }
            pivots.push((p, bits));
            out.push((w, cyc));
            if out.len() == rank {
                break;
            }
        }
    }
    out
}

/// Vertex valences counting bounded edges and rays.
pub fn valences(n: usize, edges: &[(usize, usize)], rays: &[usize]) -> Vec<usize> {
    let mut v = vec![0; n];
    for &(a, b) in edges {
        v[a] += 1;
        v[b] += 1;
    }
    for &r in rays {
        v[r] += 1;
    }
    v
}

/// Indices of edges in the core: leaves are repeatedly pruned.
pub fn core_edges(n: usize, edges: &[(usize, usize)]) -> Vec<usize> {
    let mut alive = vec![true; edges.len()];
    let mut deg = vec![0usize; n];
    for &(a, b) in edges {
        deg[a] += 1;
        deg[b] += 1;
    }
    loop {
        let mut changed = false;
        for (i, &(a, b)) in edges.iter().enumerate() {
            if alive[i] && a != b && (deg[a] == 1 || deg[b] == 1) {
                alive[i] = false;
                deg[a] -= 1;
                deg[b] -= 1;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    (0..edges.len()).filter(|&i| alive[i]).collect()
}
