/// Union-find over vertex ids with path compression, union by rank, and a
/// parity bit per vertex relative to its root (used for two-colorings).
#[derive(Debug, Clone)]
pub struct DisjointSets {
    parent: Vec<usize>,
    rank: Vec<u8>,
    parity: Vec<bool>,
    components: usize,
}

impl DisjointSets {
    pub fn new(n: usize) -> Self {
        DisjointSets {
            parent: (0..n).collect(),
            rank: vec![0; n],
            parity: vec![false; n],
            components: n,
        }
    }

    pub fn find(&mut self, x: usize) -> usize {
        self.find_with_parity(x).0
    }

    /// Root of `x` and the parity of `x` relative to that root.
    pub fn find_with_parity(&mut self, x: usize) -> (usize, bool) {
        let p = self.parent[x];
        if p == x {
            return (x, false);
        }
        let (root, p_par) = self.find_with_parity(p);
        self.parent[x] = root;
        self.parity[x] ^= p_par;
        (root, self.parity[x])
    }

    /// Merges the sets of `a` and `b`; returns false if already joined.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        self.union_with_parity(a, b, false).is_some()
    }

    /// Merges so that `parity(a) ^ parity(b) == odd`. Returns `None` if the
    /// two were already in one set (whatever their parity), otherwise the new
    /// root.
    pub fn union_with_parity(&mut self, a: usize, b: usize, odd: bool) -> Option<usize> {
        let (ra, pa) = self.find_with_parity(a);
        let (rb, pb) = self.find_with_parity(b);
        if ra == rb {
            return None;
        }
        let (big, small) = if self.rank[ra] >= self.rank[rb] {
            (ra, rb)
        } else {
            (rb, ra)
        };
        self.parent[small] = big;
        self.parity[small] = pa ^ pb ^ odd;
        if self.rank[big] == self.rank[small] {
            self.rank[big] += 1;
        }
        self.components -= 1;
        Some(big)
    }

    pub fn same(&mut self, a: usize, b: usize) -> bool {
        self.find(a) == self.find(b)
    }

    /// Number of sets, counting every singleton.
    pub fn components(&self) -> usize {
        self.components
    }
}
