/// Trie over sorted id sequences: each stored solution is one root-to-node
/// path ending in a terminal node. Children are kept sorted by label so a
/// step costs one binary search.
#[derive(Debug, Clone)]
pub struct SolutionDict {
    nodes: Vec<Node>,
    len: usize,
    operations: u64,
}

#[derive(Debug, Clone, Default)]
struct Node {
    children: Vec<(usize, usize)>,
    terminal: bool,
}

impl Default for SolutionDict {
    fn default() -> Self {
        Self::new()
    }
}

impl SolutionDict {
    pub fn new() -> Self {
        SolutionDict {
            nodes: vec![Node::default()],
            len: 0,
            operations: 0,
        }
    }

    /// Inserts a sorted, duplicate-free key; true if it was not present.
    pub fn insert(&mut self, key: &[usize]) -> bool {
        assert!(is_strictly_sorted(key), "dictionary keys must be sorted: {key:?}");
        self.operations += 1;
        let mut cur = 0;
        for &label in key {
            cur = match self.nodes[cur].children.binary_search_by_key(&label, |c| c.0) {
                Ok(i) => self.nodes[cur].children[i].1,
                Err(i) => {
                    let id = self.nodes.len();
                    self.nodes.push(Node::default());
                    self.nodes[cur].children.insert(i, (label, id));
                    id
                }
            };
        }
        let fresh = !self.nodes[cur].terminal;
        self.nodes[cur].terminal = true;
        self.len += usize::from(fresh);
        fresh
    }

    pub fn contains(&mut self, key: &[usize]) -> bool {
        self.operations += 1;
        let mut cur = 0;
        for &label in key {
            match self.nodes[cur].children.binary_search_by_key(&label, |c| c.0) {
                Ok(i) => cur = self.nodes[cur].children[i].1,
                Err(_) => return false,
            }
        }
        self.nodes[cur].terminal
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Trie nodes including the root.
    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    /// Insert and lookup calls made so far.
    pub fn operations(&self) -> u64 {
        self.operations
    }
}

fn is_strictly_sorted(key: &[usize]) -> bool {
    key.windows(2).all(|w| w[0] < w[1])
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn insert_examples() {
        let mut d = SolutionDict::new();
        assert!(d.insert(&[1, 2]));
        assert!(!d.insert(&[1, 2]));
        assert!(!d.contains(&[1]));
        assert!(d.contains(&[1, 2]));
        assert!(d.insert(&[]));
        assert!(d.contains(&[]));
        assert_eq!(d.len(), 2);
    }

    #[test]
    #[should_panic(expected = "sorted")]
    fn rejects_unsorted() {
        SolutionDict::new().insert(&[2, 1]);
    }

    proptest! {
        #[test]
        fn behaves_like_a_set(keys in proptest::collection::vec(
            proptest::collection::btree_set(0usize..12, 0..6), 0..30))
        {
            let mut d = SolutionDict::new();
            let mut reference = std::collections::BTreeSet::new();
            let mut total = 0;
            for k in &keys {
                let k: Vec<usize> = k.iter().copied().collect();
                total += k.len();
                prop_assert_eq!(d.insert(&k), reference.insert(k.clone()));
            }
            for k in &reference {
                prop_assert!(d.contains(k));
            }
            prop_assert!(d.node_count() <= 1 + total);
            prop_assert_eq!(d.len(), reference.len());
        }
    }
}
