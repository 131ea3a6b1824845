//! Disjoint-set union, with an optional undo log for backtracking search.

/// Plain union-find with union by size and path compression.
pub struct Dsu {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl Dsu {
    pub fn new(n: usize) -> Self {
        Dsu {
            parent: (0..n).collect(),
            size: vec![1; n],
        }
    }

    pub fn find(&mut self, x: usize) -> usize {
        let mut root = x;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        let mut cur = x;
        while self.parent[cur] != root {
            let next = self.parent[cur];
            self.parent[cur] = root;
            cur = next;
        }
        root
    }

    /// Returns false if x and y were already in the same set.
    pub fn union(&mut self, x: usize, y: usize) -> bool {
        let (rx, ry) = (self.find(x), self.find(y));
        if rx == ry {
            return false;
        }
        let (big, small) = if self.size[rx] >= self.size[ry] {
            (rx, ry)
        } else {
            (ry, rx)
        };
        self.parent[small] = big;
        self.size[big] += self.size[small];
        true
    }
}

/// Union-find without path compression so unions can be rolled back.
pub struct RollbackDsu {
    parent: Vec<usize>,
    size: Vec<usize>,
    log: Vec<(usize, usize)>, // (child root, parent root)
}

impl RollbackDsu {
    pub fn new(n: usize) -> Self {
        RollbackDsu {
            parent: (0..n).collect(),
            size: vec![1; n],
            log: Vec::new(),
        }
    }

    pub fn find(&self, x: usize) -> usize {
        let mut root = x;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        root
    }

    /// Returns false (and logs nothing) if x and y were already joined.
    pub fn union(&mut self, x: usize, y: usize) -> bool {
        let (rx, ry) = (self.find(x), self.find(y));
        if rx == ry {
            return false;
        }
        let (big, small) = if self.size[rx] >= self.size[ry] {
            (rx, ry)
        } else {
            (ry, rx)
        };
        self.parent[small] = big;
        self.size[big] += self.size[small];
        self.log.push((small, big));
        true
    }

    /// Number of unions performed so far; pass back to `rollback_to`.
    pub fn mark(&self) -> usize {
        self.log.len()
    }

    pub fn rollback_to(&mut self, mark: usize) {
        while self.log.len() > mark {
            let (small, big) = self.log.pop().unwrap();
            self.parent[small] = small;
            self.size[big] -= self.size[small];
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn union_detects_cycles() {
        let mut d = Dsu::new(3);
        assert!(d.union(0, 1));
        assert!(d.union(1, 2));
        assert!(!d.union(0, 2));
    }

    #[test]
    fn rollback_restores_state() {
        let mut d = RollbackDsu::new(4);
        d.union(0, 1);
        let m = d.mark();
        d.union(2, 3);
        d.union(0, 3);
        assert_eq!(d.find(2), d.find(1));
        d.rollback_to(m);
        assert_ne!(d.find(2), d.find(3));
        assert_eq!(d.find(0), d.find(1));
    }
}
