//! Small dense bit sets and binary relations.
//!
//! `Relation` stores a boolean matrix row-major in 64-bit words. Rows are
//! successor sets: `rel.get(i, j)` reads "i is related to j". The sizes in
//! this crate stay small (states of a model, theories at three atoms or
//! fewer) so dense storage is the simplest thing that works.

use alloc::vec;
use alloc::vec::Vec;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BitSet {
    len: usize,
    words: Vec<u64>,
}

impl BitSet {
    pub fn new(len: usize) -> BitSet {
        BitSet {
            len,
            words: vec![0; len.div_ceil(64)],
        }
    }

    pub fn full(len: usize) -> BitSet {
        let mut s = BitSet::new(len);
        for i in 0..len {
            s.insert(i);
        }
        s
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn contains(&self, i: usize) -> bool {
        debug_assert!(i < self.len);
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn insert(&mut self, i: usize) {
        debug_assert!(i < self.len);
        self.words[i / 64] |= 1u64 << (i % 64);
    }

    pub fn remove(&mut self, i: usize) {
        debug_assert!(i < self.len);
        self.words[i / 64] &= !(1u64 << (i % 64));
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|w| *w == 0)
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn intersects(&self, other: &BitSet) -> bool {
        self.words
            .iter()
            .zip(&other.words)
            .any(|(a, b)| a & b != 0)
    }

    pub fn is_subset_of(&self, other: &BitSet) -> bool {
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
    }

    /// Members in ascending order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, word)| {
            let mut rest = *word;
            core::iter::from_fn(move || {
                if rest == 0 {
                    None
                } else {
                    let b = rest.trailing_zeros() as usize;
                    rest &= rest - 1;
                    Some(wi * 64 + b)
                }
            })
        })
    }

    pub(crate) fn words(&self) -> &[u64] {
        &self.words
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relation {
    n: usize,
    stride: usize,
    bits: Vec<u64>,
}

impl Relation {
    pub fn new(n: usize) -> Relation {
        let stride = n.div_ceil(64).max(1);
        Relation {
            n,
            stride,
            bits: vec![0; n * stride],
        }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Relation {
        let mut rel = Relation::new(n);
        for &(i, j) in edges {
            rel.set(i, j);
        }
        rel
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        debug_assert!(i < self.n && j < self.n);
        self.bits[i * self.stride + j / 64] >> (j % 64) & 1 == 1
    }

    pub fn set(&mut self, i: usize, j: usize) {
        debug_assert!(i < self.n && j < self.n);
        self.bits[i * self.stride + j / 64] |= 1u64 << (j % 64);
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |i| (0..self.n).filter_map(move |j| self.get(i, j).then_some((i, j))))
    }

    fn row(&self, i: usize) -> &[u64] {
        &self.bits[i * self.stride..(i + 1) * self.stride]
    }

    /// Does row `i` intersect the given set?
    pub fn row_intersects(&self, i: usize, set: &BitSet) -> bool {
        self.row(i).iter().zip(set.words()).any(|(a, b)| a & b != 0)
    }

    pub fn transpose(&self) -> Relation {
        let mut t = Relation::new(self.n);
        for (i, j) in self.edges() {
            t.set(j, i);
        }
        t
    }

    pub fn irreflexive(&self) -> bool {
        (0..self.n).all(|i| !self.get(i, i))
    }

    /// First asymmetry violation `(i, j)` with `i R j` and `j R i`, if any.
    pub fn asymmetry_violation(&self) -> Option<(usize, usize)> {
        for i in 0..self.n {
            for j in 0..self.n {
                if i != j && self.get(i, j) && self.get(j, i) {
                    return Some((i, j));
                }
            }
        }
        (0..self.n).find(|&i| self.get(i, i)).map(|i| (i, i))
    }

    /// First transitivity violation `(i, j, k)` with `i R j`, `j R k` but not
    /// `i R k`, if any.
    pub fn transitivity_violation(&self) -> Option<(usize, usize, usize)> {
        for i in 0..self.n {
            for j in 0..self.n {
                if !self.get(i, j) {
                    continue;
                }
                for k in 0..self.n {
                    if self.get(j, k) && !self.get(i, k) {
                        return Some((i, j, k));
                    }
                }
            }
        }
        None
    }

    pub fn is_transitive(&self) -> bool {
        self.transitivity_violation().is_none()
    }

    pub fn transitive_closure(&self) -> Relation {
        let mut closed = self.clone();
        // Warshall on bit rows
        for k in 0..self.n {
            for i in 0..self.n {
                if closed.get(i, k) {
                    for w in 0..self.stride {
                        let krow = closed.bits[k * self.stride + w];
                        closed.bits[i * self.stride + w] |= krow;
                    }
                }
            }
        }
        closed
    }

    /// A directed cycle, as a list of nodes, if one exists.
    pub fn find_cycle(&self) -> Option<Vec<usize>> {
        #[derive(Clone, Copy, PartialEq)]
        enum Mark {
            White,
            Grey,
            Black,
        }
        let mut mark = vec![Mark::White; self.n];
        let mut stack: Vec<usize> = Vec::new();

        // Iterative DFS keeping an explicit path.
        for start in 0..self.n {
            if mark[start] != Mark::White {
                continue;
            }
            let mut todo: Vec<(usize, usize)> = vec![(start, 0)];
            while let Some(&mut (node, ref mut next)) = todo.last_mut() {
                if *next == 0 {
                    mark[node] = Mark::Grey;
                    stack.push(node);
                }
                let mut advanced = false;
                while *next < self.n {
                    let j = *next;
                    *next += 1;
                    if !self.get(node, j) {
                        continue;
                    }
                    match mark[j] {
                        Mark::Grey => {
                            let pos = stack.iter().position(|&s| s == j).unwrap();
                            return Some(stack[pos..].to_vec());
                        }
                        Mark::White => {
                            todo.push((j, 0));
                            advanced = true;
                            break;
                        }
                        Mark::Black => {}
                    }
                }
                if !advanced && todo.last().map(|&(n, _)| n) == Some(node) {
                    mark[node] = Mark::Black;
                    stack.pop();
                    todo.pop();
                }
            }
        }
        None
    }
}

/// Strongly connected components via Tarjan's algorithm, iterative form.
/// Returns a component id per node; ids are assigned in discovery order.
pub fn strongly_connected_components(succ: impl Fn(usize) -> Vec<usize>, n: usize) -> Vec<usize> {
    const UNSET: usize = usize::MAX;
    let mut index = vec![UNSET; n];
    let mut lowlink = vec![0usize; n];
    let mut on_stack = vec![false; n];
    let mut stack: Vec<usize> = Vec::new();
    let mut comp = vec![UNSET; n];
    let mut next_index = 0usize;
    let mut next_comp = 0usize;

    for root in 0..n {
        if index[root] != UNSET {
            continue;
        }
        let mut work: Vec<(usize, Vec<usize>, usize)> = vec![(root, succ(root), 0)];
        index[root] = next_index;
        lowlink[root] = next_index;
        next_index += 1;
        stack.push(root);
        on_stack[root] = true;

        while let Some((v, succs, mut i)) = work.pop() {
            let mut descended = false;
            while i < succs.len() {
                let w = succs[i];
                i += 1;
                if index[w] == UNSET {
                    index[w] = next_index;
                    lowlink[w] = next_index;
                    next_index += 1;
                    stack.push(w);
                    on_stack[w] = true;
                    work.push((v, succs, i));
                    work.push((w, succ(w), 0));
                    descended = true;
                    break;
                } else if on_stack[w] {
                    lowlink[v] = lowlink[v].min(index[w]);
                }
            }
            if descended {
                continue;
            }
            if lowlink[v] == index[v] {
                loop {
                    let w = stack.pop().unwrap();
                    on_stack[w] = false;
                    comp[w] = next_comp;
                    if w == v {
                        break;
                    }
                }
                next_comp += 1;
            }
            if let Some(&mut (parent, _, _)) = work.last_mut() {
                lowlink[parent] = lowlink[parent].min(lowlink[v]);
            }
        }
    }
    comp
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closure_and_cycles() {
        let rel = Relation::from_edges(4, &[(0, 1), (1, 2)]);
        assert!(rel.irreflexive());
        assert_eq!(rel.transitivity_violation(), Some((0, 1, 2)));
        let closed = rel.transitive_closure();
        assert!(closed.get(0, 2));
        assert!(closed.is_transitive());
        assert!(closed.find_cycle().is_none());

        let cyclic = Relation::from_edges(3, &[(0, 1), (1, 2), (2, 0)]);
        let cycle = cyclic.find_cycle().unwrap();
        assert_eq!(cycle.len(), 3);
    }

    #[test]
    fn scc_partition() {
        // 0 <-> 1, 2 alone, 3 -> 0
        let rel = Relation::from_edges(4, &[(0, 1), (1, 0), (3, 0)]);
        let succ = |i: usize| (0..4).filter(|&j| rel.get(i, j)).collect::<Vec<_>>();
        let comp = strongly_connected_components(succ, 4);
        assert_eq!(comp[0], comp[1]);
        assert_ne!(comp[0], comp[2]);
        assert_ne!(comp[0], comp[3]);
    }

    #[test]
    fn bitset_ops() {
        let mut s = BitSet::new(130);
        s.insert(0);
        s.insert(64);
        s.insert(129);
        assert_eq!(s.count(), 3);
        assert_eq!(s.iter().collect::<Vec<_>>(), vec![0, 64, 129]);
        let mut t = BitSet::new(130);
        t.insert(64);
        assert!(t.is_subset_of(&s));
        assert!(s.intersects(&t));
        s.remove(64);
        assert!(!s.intersects(&t));
    }
}
