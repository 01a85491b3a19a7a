//! Feature-vector trie.
//!
//! Each level of the trie branches on one feature value. Looking for entries
//! a query may subsume only descends into children whose value is at least the
//! query's; looking for entries that may subsume the query descends into
//! values at most the query's.

use std::collections::BTreeMap;
use std::ops::Bound;

use super::features::ClauseFeatureVector;

#[derive(Default, Debug)]
struct Node {
    children: BTreeMap<u32, Node>,
    items: Vec<usize>,
}

#[derive(Default, Debug)]
pub struct FeatureIndex {
    root: Node,
    len: usize,
}

impl FeatureIndex {
    pub fn new() -> FeatureIndex {
        FeatureIndex::default()
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn insert(&mut self, fv: &ClauseFeatureVector, item: usize) {
        let mut node = &mut self.root;
        for &x in fv.0.iter() {
            node = node.children.entry(x).or_default();
        }
        node.items.push(item);
        self.len += 1;
    }

    /// Returns whether the item was present.
    pub fn remove(&mut self, fv: &ClauseFeatureVector, item: usize) -> bool {
        fn go(node: &mut Node, keys: &[u32], item: usize) -> bool {
            match keys.split_first() {
                None => {
                    let before = node.items.len();
                    node.items.retain(|&i| i != item);
                    node.items.len() != before
                }
                Some((k, rest)) => {
                    let Some(child) = node.children.get_mut(k) else {
                        return false;
                    };
                    let found = go(child, rest, item);
                    if child.children.is_empty() && child.items.is_empty() {
                        node.children.remove(k);
                    }
                    found
                }
            }
        }
        let found = go(&mut self.root, &fv.0, item);
        if found {
            self.len -= 1;
        }
        found
    }

    /// Items whose feature vector dominates `fv` (candidates for being subsumed).
    pub fn dominating(&self, fv: &ClauseFeatureVector, out: &mut Vec<usize>) {
        fn go(node: &Node, keys: &[u32], out: &mut Vec<usize>) {
            match keys.split_first() {
                None => out.extend_from_slice(&node.items),
                Some((&k, rest)) => {
                    for (_, child) in node.children.range((Bound::Included(k), Bound::Unbounded)) {
                        go(child, rest, out);
                    }
                }
            }
        }
        go(&self.root, &fv.0, out);
    }

    /// Items whose feature vector is dominated by `fv` (candidates for subsuming).
    pub fn dominated(&self, fv: &ClauseFeatureVector, out: &mut Vec<usize>) {
        fn go(node: &Node, keys: &[u32], out: &mut Vec<usize>) {
            match keys.split_first() {
                None => out.extend_from_slice(&node.items),
                Some((&k, rest)) => {
                    for (_, child) in node.children.range(..=k) {
                        go(child, rest, out);
                    }
                }
            }
        }
        go(&self.root, &fv.0, out);
    }
}
