//! Labeled, binary, increasing, topological trees.
//!
//! Node 1 is the root and every child label exceeds its parent label. For
//! odd n every node has zero or two children; for even n exactly one node
//! has a single (left) child and that node is the rightmost one in the
//! planar embedding. Trees project onto alternating permutations by
//! reading labels in abscissa order, and spread back out by recursing on
//! the minimum letter.

use crate::alternating::AltPermutation;
use crate::exact::{rat, Rational};
use std::collections::BTreeMap;
use std::fmt::Write as _;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
struct Node {
    left: Option<usize>,
    right: Option<usize>,
    parent: Option<usize>,
}

/// Structural equality is on the (left, right) child maps; the planar
/// embedding is derived from them, never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IncTree {
    nodes: Vec<Node>, // nodes[label - 1]
}

impl IncTree {
    /// The single tree of T_1.
    pub fn singleton() -> Self {
        IncTree { nodes: vec![Node::default()] }
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn left(&self, label: usize) -> Option<usize> {
        self.nodes[label - 1].left
    }

    pub fn right(&self, label: usize) -> Option<usize> {
        self.nodes[label - 1].right
    }

    pub fn parent(&self, label: usize) -> Option<usize> {
        self.nodes[label - 1].parent
    }

    fn arity(&self, label: usize) -> usize {
        self.left(label).is_some() as usize + self.right(label).is_some() as usize
    }

    /// Exact dyadic abscissa of every node: the root sits at 0 and a child
    /// at depth d+1 is offset from its parent at depth d by 2^{-d}. This
    /// reproduces the coordinates 0, +-1, +-1/2, +-1/4, ... and keeps all
    /// abscissas distinct.
    fn abscissas(&self) -> Vec<(Rational, usize)> {
        let mut out = Vec::with_capacity(self.len());
        let mut stack = vec![(1usize, Rational::from_integer(0.into()), 0u32)];
        while let Some((label, x, depth)) = stack.pop() {
            let offset = rat(1) / Rational::from_integer(num_bigint::BigInt::from(1) << depth);
            if let Some(l) = self.left(label) {
                stack.push((l, &x - &offset, depth + 1));
            }
            if let Some(r) = self.right(label) {
                stack.push((r, &x + &offset, depth + 1));
            }
            out.push((x, label));
        }
        out.sort();
        out
    }

    /// Reads the labels in ascending abscissa order; the result is always
    /// alternating.
    pub fn projection(&self) -> AltPermutation {
        let xs = self.abscissas();
        for w in xs.windows(2) {
            assert!(w[0].0 != w[1].0, "abscissa collision in planar embedding");
        }
        AltPermutation::new(xs.into_iter().map(|(_, label)| label).collect())
    }

    /// Root-to-leaf path following the minimum child at each step.
    pub fn minimal_chain(&self) -> Vec<usize> {
        let mut chain = vec![1];
        let mut cur = 1;
        loop {
            let next = match (self.left(cur), self.right(cur)) {
                (Some(a), Some(b)) => a.min(b),
                (Some(a), None) | (None, Some(a)) => a,
                (None, None) => break,
            };
            chain.push(next);
            cur = next;
        }
        chain
    }

    /// End of the minimal chain; 1 on the singleton tree.
    pub fn eoc(&self) -> usize {
        *self.minimal_chain().last().expect("chain is never empty")
    }

    /// Parent of the node labeled n; 0 on the singleton tree.
    pub fn pom(&self) -> usize {
        self.parent(self.len()).unwrap_or(0)
    }

    /// Nested parenthesized form `label(left,right)` with `-` for an
    /// absent child; leaves print as the bare label.
    pub fn serialize(&self) -> String {
        let mut s = String::new();
        self.write_node(1, &mut s);
        s
    }

    fn write_node(&self, label: usize, out: &mut String) {
        write!(out, "{}", label).unwrap();
        if self.arity(label) == 0 {
            return;
        }
        out.push('(');
        match self.left(label) {
            Some(l) => self.write_node(l, out),
            None => out.push('-'),
        }
        out.push(',');
        match self.right(label) {
            Some(r) => self.write_node(r, out),
            None => out.push('-'),
        }
        out.push(')');
    }

    /// Checks the arity axiom: all nodes of arity 0 or 2 for odd n; for
    /// even n exactly one node of arity 1, holding a left child, and that
    /// node is the rightmost in the planar embedding. Returns false
    /// instead of assuming the axiom holds.
    pub fn check_arity_axiom(&self) -> bool {
        let n = self.len();
        let singles: Vec<usize> = (1..=n).filter(|&l| self.arity(l) == 1).collect();
        if n % 2 == 1 {
            singles.is_empty()
        } else {
            if singles.len() != 1 {
                return false;
            }
            let s = singles[0];
            if self.left(s).is_none() {
                return false;
            }
            // rightmost node = maximum abscissa = last letter of the projection
            let xs = self.abscissas();
            xs.last().map(|&(_, label)| label) == Some(s)
        }
    }
}

/// Builds the tree whose projection is `sigma`, by recursion: the minimum
/// letter of each factor becomes the subtree root, the left factor spreads
/// into the left subtree and the right factor into the right subtree.
pub fn spreading_out(sigma: &AltPermutation) -> IncTree {
    let n = sigma.len();
    let mut nodes = vec![Node::default(); n];
    build_spread(sigma.values(), None, &mut nodes);
    IncTree { nodes }
}

fn build_spread(word: &[usize], parent: Option<(usize, bool)>, nodes: &mut [Node]) {
    if word.is_empty() {
        return;
    }
    let (pos, &root) = word
        .iter()
        .enumerate()
        .min_by_key(|&(_, v)| v)
        .expect("nonempty word");
    if let Some((p, is_left)) = parent {
        nodes[root - 1].parent = Some(p);
        if is_left {
            nodes[p - 1].left = Some(root);
        } else {
            nodes[p - 1].right = Some(root);
        }
    }
    build_spread(&word[..pos], Some((root, true)), nodes);
    build_spread(&word[pos + 1..], Some((root, false)), nodes);
}

/// Yields every tree of T_n exactly once, in lexicographic order of the
/// projections. Labels 2..n are inserted in increasing order into free
/// child slots; branches that can no longer satisfy the arity axiom are
/// pruned, and the axiom is checked on every completed shape.
pub fn enumerate_trees<F: FnMut(&IncTree)>(n: usize, mut visit: F) {
    assert!(n >= 1, "n must be at least 1");
    let mut nodes = vec![Node::default(); n];
    let mut collected = Vec::new();
    insert_labels(2, n, &mut nodes, 0, &mut collected);
    collected.sort_by(|a: &(AltPermutation, IncTree), b| a.0.cmp(&b.0));
    for (_, t) in &collected {
        visit(t);
    }
}

fn insert_labels(
    next: usize,
    n: usize,
    nodes: &mut Vec<Node>,
    single_count: usize,
    out: &mut Vec<(AltPermutation, IncTree)>,
) {
    if next > n {
        let t = IncTree { nodes: nodes.clone() };
        if t.check_arity_axiom() {
            out.push((t.projection(), t));
        }
        return;
    }
    // Each remaining insertion can repair at most one arity-1 node; the
    // finished tree may keep at most one (n even) or none (n odd).
    let budget = if n % 2 == 0 { 1 } else { 0 };
    if single_count > (n - next + 1) + budget {
        return;
    }
    for parent in 1..next {
        for is_left in [true, false] {
            let slot_free = if is_left {
                nodes[parent - 1].left.is_none()
            } else {
                nodes[parent - 1].right.is_none()
            };
            if !slot_free {
                continue;
            }
            let arity_before =
                nodes[parent - 1].left.is_some() as usize + nodes[parent - 1].right.is_some() as usize;
            // A leaf parent becomes a one-child node; a one-child parent is
            // repaired. The inserted node is itself a leaf.
            let new_single = if arity_before == 0 {
                single_count + 1
            } else {
                single_count - 1
            };
            if is_left {
                nodes[parent - 1].left = Some(next);
            } else {
                nodes[parent - 1].right = Some(next);
            }
            nodes[next - 1].parent = Some(parent);
            insert_labels(next + 1, n, nodes, new_single, out);
            nodes[next - 1].parent = None;
            if is_left {
                nodes[parent - 1].left = None;
            } else {
                nodes[parent - 1].right = None;
            }
        }
    }
}

/// Materializes T_n.
pub fn trees(n: usize) -> Vec<IncTree> {
    let mut out = Vec::new();
    enumerate_trees(n, |t| out.push(t.clone()));
    out
}

/// Distribution of pom over T_n.
pub fn pom_distribution(n: usize) -> BTreeMap<usize, u64> {
    let mut counts = BTreeMap::new();
    enumerate_trees(n, |t| {
        *counts.entry(t.pom()).or_insert(0u64) += 1;
    });
    counts
}

/// Distribution of eoc - 1 over T_n.
pub fn eoc_distribution(n: usize) -> BTreeMap<usize, u64> {
    let mut counts = BTreeMap::new();
    enumerate_trees(n, |t| {
        *counts.entry(t.eoc() - 1).or_insert(0u64) += 1;
    });
    counts
}

#[cfg(test)]
mod tests {
    use super::*;

    /// The 7-node tree t_1 with projection 6154723.
    fn worked_t1() -> IncTree {
        spreading_out(&AltPermutation::new(vec![6, 1, 5, 4, 7, 2, 3]))
    }

    /// The 8-node tree t_2 with projection 61548273.
    fn worked_t2() -> IncTree {
        spreading_out(&AltPermutation::new(vec![6, 1, 5, 4, 8, 2, 7, 3]))
    }

    #[test]
    fn worked_examples_roundtrip() {
        assert_eq!(worked_t1().projection().values(), &[6, 1, 5, 4, 7, 2, 3]);
        assert_eq!(worked_t2().projection().values(), &[6, 1, 5, 4, 8, 2, 7, 3]);
        let root = IncTree::singleton();
        assert_eq!(root.projection().values(), &[1]);
        assert_eq!(spreading_out(&AltPermutation::new(vec![1])), root);
    }

    #[test]
    fn worked_examples_statistics() {
        let t1 = worked_t1();
        assert_eq!(t1.minimal_chain(), vec![1, 2, 3]);
        assert_eq!(t1.eoc(), 3);
        assert_eq!(t1.pom(), 4);

        let t2 = worked_t2();
        assert_eq!(t2.minimal_chain(), vec![1, 2, 3, 7]);
        assert_eq!(t2.eoc(), 7);
        assert_eq!(t2.pom(), 4);

        let single = IncTree::singleton();
        assert_eq!(single.minimal_chain(), vec![1]);
        assert_eq!(single.eoc(), 1);
        assert_eq!(single.pom(), 0);
    }

    #[test]
    fn worked_t1_structure() {
        // Root 1 with left child 6 and right child 2; 2 carries 4 (left)
        // and 3 (right); 4 carries the leaves 5 and 7.
        let t1 = worked_t1();
        assert_eq!(t1.left(1), Some(6));
        assert_eq!(t1.right(1), Some(2));
        assert_eq!(t1.left(2), Some(4));
        assert_eq!(t1.right(2), Some(3));
        assert_eq!(t1.left(4), Some(5));
        assert_eq!(t1.right(4), Some(7));
        assert_eq!(t1.parent(7), Some(4));
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(trees(1).len(), 1);
        assert_eq!(trees(2).len(), 1);
        assert_eq!(trees(3).len(), 2);
        assert_eq!(trees(4).len(), 5);
        assert_eq!(trees(5).len(), 16);
        assert_eq!(trees(6).len(), 61);
        assert_eq!(trees(7).len(), 272);
        assert_eq!(trees(8).len(), 1385);
    }

    #[test]
    fn enumeration_matches_permutations() {
        use crate::alternating::alternating_permutations;
        for n in 1..=7usize {
            let projected: Vec<AltPermutation> =
                trees(n).iter().map(|t| t.projection()).collect();
            let perms = alternating_permutations(n);
            assert_eq!(projected, perms, "n = {}", n);
        }
    }

    #[test]
    fn spreading_out_213() {
        let t = spreading_out(&AltPermutation::new(vec![2, 1, 3]));
        assert_eq!(t.left(1), Some(2));
        assert_eq!(t.right(1), Some(3));
        assert_eq!(t.serialize(), "1(2,3)");
    }

    #[test]
    fn serialization_forms() {
        assert_eq!(IncTree::singleton().serialize(), "1");
        let t2 = spreading_out(&AltPermutation::new(vec![2, 1])); // one left child
        assert_eq!(t2.serialize(), "1(2,-)");
        assert_eq!(worked_t1().serialize(), "1(6,2(4(5,7),3))");
    }

    #[test]
    fn arity_axiom_on_enumerated_trees() {
        for n in 1..=8usize {
            for t in trees(n) {
                assert!(t.check_arity_axiom());
            }
        }
    }

    #[test]
    fn pom_and_eoc_distributions() {
        let p4 = pom_distribution(4);
        assert_eq!(p4.get(&1), Some(&1));
        assert_eq!(p4.get(&2), Some(&3));
        assert_eq!(p4.get(&3), Some(&1));

        let p3 = pom_distribution(3);
        assert_eq!(p3.get(&1), Some(&2));
        assert_eq!(p3.len(), 1);

        let e1 = eoc_distribution(1);
        assert_eq!(e1.get(&0), Some(&1));
    }

    #[test]
    fn eoc_minus_one_equidistributed_with_pom() {
        for n in 1..=8usize {
            assert_eq!(eoc_distribution(n), pom_distribution(n), "n = {}", n);
        }
    }

    #[test]
    fn pom_equals_grn_of_projection() {
        for n in 1..=8usize {
            enumerate_trees(n, |t| {
                assert_eq!(t.pom(), t.projection().grn());
            });
        }
    }
}
