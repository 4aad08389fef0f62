//! Unpruned reference implementations, written against plain adjacency
//! matrices so they share nothing with the solver but the input graph.
#![allow(dead_code)]

use pdom_core::Graph;

pub struct Matrix {
    pub n: usize,
    adj: Vec<Vec<bool>>,
}

impl Matrix {
    pub fn of(g: &Graph) -> Self {
        let n = g.order();
        let mut adj = vec![vec![false; n]; n];
        for (u, v) in g.edges() {
            adj[u][v] = true;
            adj[v][u] = true;
        }
        Matrix { n, adj }
    }

    /// Number of vertices equal or adjacent to some member of `members`.
    pub fn covered(&self, members: &[usize]) -> usize {
        (0..self.n)
            .filter(|&x| members.iter().any(|&s| s == x || self.adj[s][x]))
            .count()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].iter().filter(|&&b| b).count()
    }

    pub fn connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(u) = stack.pop() {
            for (v, &edge) in self.adj[u].iter().enumerate() {
                if edge && !seen[v] {
                    seen[v] = true;
                    stack.push(v);
                }
            }
        }
        seen.into_iter().all(|b| b)
    }
}

/// Least `c` with `c * den >= num * n`, by counting up.
pub fn target(n: usize, num: u64, den: u64) -> usize {
    (0..=n).find(|&c| c as u64 * den >= num * n as u64).unwrap()
}

fn members(mask: u64) -> Vec<usize> {
    (0..64).filter(|&i| mask >> i & 1 == 1).collect()
}

/// Minimum size and every minimum set, each as an ascending index list,
/// sorted lexicographically, by scanning all `2^n` subsets.
pub fn brute_family(g: &Graph, num: u64, den: u64) -> (usize, Vec<Vec<usize>>) {
    let m = Matrix::of(g);
    assert!(m.n <= 20, "brute force is exponential");
    let t = target(m.n, num, den);
    let mut best = usize::MAX;
    let mut sets: Vec<Vec<usize>> = Vec::new();
    for mask in 0u64..1 << m.n {
        let s = members(mask);
        if s.len() > best || m.covered(&s) < t {
            continue;
        }
        if s.len() < best {
            best = s.len();
            sets.clear();
        }
        sets.push(s);
    }
    sets.sort();
    (best, sets)
}

pub fn brute_gamma(g: &Graph, num: u64, den: u64) -> usize {
    brute_family(g, num, den).0
}

pub fn brute_influence(g: &Graph, num: u64, den: u64) -> Vec<usize> {
    let mut all: Vec<usize> = brute_family(g, num, den).1.into_iter().flatten().collect();
    all.sort();
    all.dedup();
    all
}

/// Canonical string by trying every permutation (Heap's algorithm).
pub fn naive_canonical(m: &Matrix) -> Vec<bool> {
    let n = m.n;
    let mut perm: Vec<usize> = (0..n).collect();
    let code = |perm: &[usize]| -> Vec<bool> {
        let mut out = Vec::new();
        for j in 1..n {
            for i in 0..j {
                out.push(m.adj[perm[i]][perm[j]]);
            }
        }
        out
    };
    let mut best = code(&perm);
    let mut c = vec![0; n];
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            best = best.min(code(&perm));
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    best
}

/// Number of isomorphism classes of (connected) graphs on `n` vertices by
/// raw edge-mask iteration.
pub fn brute_class_count(n: usize, connected_only: bool) -> usize {
    let pairs: Vec<(usize, usize)> = (1..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    let mut classes = std::collections::HashSet::new();
    for mask in 0u64..1 << pairs.len() {
        let edges = pairs
            .iter()
            .enumerate()
            .filter(|(k, _)| mask >> k & 1 == 1)
            .map(|(_, &e)| e);
        let g = Graph::from_edges(n, edges).unwrap();
        let m = Matrix::of(&g);
        if connected_only && !m.connected() {
            continue;
        }
        classes.insert(naive_canonical(&m));
    }
    classes.len()
}
