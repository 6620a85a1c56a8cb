//! Maximum cardinality matching in general graphs (Edmonds' blossom
//! algorithm, the classic O(V^3) array formulation).
//!
//! Roots are tried in ascending vertex order and the adjacency lists are
//! sorted, so the computed matching is deterministic.

use std::collections::VecDeque;

use super::Graph;

const NONE: usize = usize::MAX;

struct Blossom {
    adj: Vec<Vec<usize>>,
    mate: Vec<usize>,
    parent: Vec<usize>,
    base: Vec<usize>,
    used: Vec<bool>,
}

/// Returns the matching as sorted vertex pairs.
pub fn maximum_matching(g: &Graph) -> Vec<(u32, u32)> {
    let verts: Vec<u32> = g.vertices().collect();
    let n = verts.len();
    let index_of = |v: u32| verts.binary_search(&v).expect("vertex exists");
    let adj: Vec<Vec<usize>> = verts
        .iter()
        .map(|&v| g.neighbors(v).into_iter().map(index_of).collect())
        .collect();

    let mut b = Blossom {
        adj,
        mate: vec![NONE; n],
        parent: vec![NONE; n],
        base: (0..n).collect(),
        used: vec![false; n],
    };
    for root in 0..n {
        if b.mate[root] == NONE {
            b.try_augment(root);
        }
    }

    let mut out = Vec::new();
    for v in 0..n {
        let u = b.mate[v];
        if u != NONE && v < u {
            out.push((verts[v], verts[u]));
        }
    }
    out
}

impl Blossom {
    /// Lowest common ancestor of a and b in the alternating forest, walking
    /// through blossom bases.
    fn lca(&self, mut a: usize, mut b: usize) -> usize {
        let n = self.adj.len();
        let mut on_path = vec![false; n];
        loop {
            a = self.base[a];
            on_path[a] = true;
            if self.mate[a] == NONE {
                break;
            }
            a = self.parent[self.mate[a]];
        }
        loop {
            b = self.base[b];
            if on_path[b] {
                return b;
            }
            b = self.parent[self.mate[b]];
        }
    }

    /// Walks from v up to the blossom base b, flagging every blossom on the
    /// way and re-rooting parents through `child`.
    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize, flag: &mut [bool]) {
        while self.base[v] != b {
            flag[self.base[v]] = true;
            flag[self.base[self.mate[v]]] = true;
            self.parent[v] = child;
            child = self.mate[v];
            v = self.parent[self.mate[v]];
        }
    }

    /// BFS from an exposed root; returns true if an augmenting path was
    /// found and flipped.
    fn try_augment(&mut self, root: usize) -> bool {
        let n = self.adj.len();
        self.parent.iter_mut().for_each(|p| *p = NONE);
        self.used.iter_mut().for_each(|u| *u = false);
        for (i, b) in self.base.iter_mut().enumerate() {
            *b = i;
        }
        self.used[root] = true;
        let mut queue = VecDeque::from([root]);

        while let Some(v) = queue.pop_front() {
            for i in 0..self.adj[v].len() {
                let to = self.adj[v][i];
                if self.base[v] == self.base[to] || self.mate[v] == to {
                    continue;
                }
                if to == root || (self.mate[to] != NONE && self.parent[self.mate[to]] != NONE) {
                    // odd cycle: contract the blossom
                    let cur_base = self.lca(v, to);
                    let mut flag = vec![false; n];
                    self.mark_path(v, cur_base, to, &mut flag);
                    self.mark_path(to, cur_base, v, &mut flag);
                    for u in 0..n {
                        if flag[self.base[u]] {
                            self.base[u] = cur_base;
                            if !self.used[u] {
                                self.used[u] = true;
                                queue.push_back(u);
                            }
                        }
                    }
                } else if self.parent[to] == NONE {
                    self.parent[to] = v;
                    if self.mate[to] == NONE {
                        self.flip(to);
                        return true;
                    }
                    // to is matched: its mate becomes an even vertex
                    self.used[self.mate[to]] = true;
                    queue.push_back(self.mate[to]);
                }
            }
        }
        false
    }

    /// Flips matched/unmatched edges along the alternating path ending at
    /// the exposed vertex v.
    fn flip(&mut self, mut v: usize) {
        while v != NONE {
            let pv = self.parent[v];
            let next = self.mate[pv];
            self.mate[v] = pv;
            self.mate[pv] = v;
            v = next;
        }
    }
}
