//! Zigzag posets (fences and circular fences) and their order ideals.
//!
//! Nodes are numbered 1-based along the zigzag, matching the classical
//! x_1, ..., x_{n+1} indexing; a circular fence identifies x_{n+1} with x_1
//! so its masks fit in n bits.

use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::composition::{Composition, Step};
use crate::Error;

/// Default cap on node count for exhaustive ideal enumeration.
pub const IDEAL_ENUM_BOUND: usize = 24;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash, Serialize, Deserialize)]
pub enum PosetKind {
    Fence,
    Circular,
}

impl fmt::Display for PosetKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PosetKind::Fence => write!(f, "fence"),
            PosetKind::Circular => write!(f, "circular"),
        }
    }
}

/// A downward-closed node set, stored as a bitmask with bit i-1 for node i.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct IdealSet(pub u64);

impl IdealSet {
    pub fn empty() -> Self {
        IdealSet(0)
    }

    pub fn from_nodes(nodes: &[usize]) -> Self {
        let mut m = 0u64;
        for &v in nodes {
            m |= 1 << (v - 1);
        }
        IdealSet(m)
    }

    pub fn contains(&self, node: usize) -> bool {
        self.0 >> (node - 1) & 1 == 1
    }

    pub fn insert(&mut self, node: usize) {
        self.0 |= 1 << (node - 1);
    }

    /// Number of nodes in the set (the ideal's rank).
    pub fn size(&self) -> u32 {
        self.0.count_ones()
    }

    pub fn nodes(&self) -> impl Iterator<Item = usize> + '_ {
        (0..64).filter(|i| self.0 >> i & 1 == 1).map(|i| i + 1)
    }
}

impl fmt::Debug for IdealSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.nodes().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "x{v}")?;
        }
        write!(f, "}}")
    }
}

/// A node shared by two adjacent segments.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Junction {
    pub node: usize,
    /// The segment ending at this node.
    pub left_seg: usize,
    /// The segment starting at this node (wraps to 1 on a circular fence).
    pub right_seg: usize,
}

/// A fence or circular fence poset built from a composition.
#[derive(Clone, Debug)]
pub struct ZigzagPoset {
    kind: PosetKind,
    composition: Composition,
    node_count: usize,
    covers: Vec<(usize, usize)>,
    lower_adj: Vec<Vec<usize>>,
    upper_adj: Vec<Vec<usize>>,
    seg_of: Vec<usize>,
    shared_tops: Vec<Junction>,
    shared_bottoms: Vec<Junction>,
    /// Unshared nodes of each segment, listed from lowest to highest.
    seg_unshared: Vec<Vec<usize>>,
}

/// Builds the fence poset of a composition on size+1 nodes. Half-open
/// compositions (zero first or last part) yield fences that start with a
/// down step or stop a step early.
pub fn fence(alpha: &Composition) -> Result<ZigzagPoset, Error> {
    ZigzagPoset::build(alpha.clone(), PosetKind::Fence)
}

/// Builds the circular fence poset on size-many nodes by identifying the node
/// after the last with the first. Requires an even number of positive parts.
pub fn circular_fence(alpha: &Composition) -> Result<ZigzagPoset, Error> {
    if !alpha.is_proper() || !alpha.len().is_multiple_of(2) {
        return Err(Error::OddParts {
            composition: alpha.to_string(),
        });
    }
    ZigzagPoset::build(alpha.clone(), PosetKind::Circular)
}

impl ZigzagPoset {
    fn build(composition: Composition, kind: PosetKind) -> Result<Self, Error> {
        let n = composition.size();
        let node_count = match kind {
            PosetKind::Fence => n + 1,
            PosetKind::Circular => n,
        };
        if node_count == 0 {
            return Err(Error::EmptyComposition);
        }

        let steps = composition.steps();
        let wrap = |v: usize| -> usize {
            match kind {
                PosetKind::Fence => v,
                PosetKind::Circular => (v - 1) % n + 1,
            }
        };

        let mut covers: Vec<(usize, usize)> = Vec::with_capacity(n);
        for (j, step) in steps.iter().enumerate() {
            let a = j + 1;
            let b = wrap(j + 2);
            let pair = match step {
                Step::Up => (a, b),
                Step::Down => (b, a),
            };
            if !covers.contains(&pair) {
                covers.push(pair);
            }
        }

        let mut lower_adj = vec![Vec::new(); node_count];
        let mut upper_adj = vec![Vec::new(); node_count];
        for &(lo, hi) in &covers {
            upper_adj[lo - 1].push(hi);
            lower_adj[hi - 1].push(lo);
        }

        // Segment of each node: part i spans nodes B_i+1 ..= B_{i+1}+1; shared
        // nodes take the lower-indexed flanking segment.
        let s = composition.len();
        let mut seg_of = vec![0usize; node_count];
        let mut boundary = 0usize; // B_i
        for (i, &p) in composition.parts().iter().enumerate() {
            for v in boundary + 1..=boundary + p as usize + 1 {
                let v = wrap(v);
                if seg_of[v - 1] == 0 {
                    seg_of[v - 1] = i + 1;
                }
            }
            boundary += p as usize;
        }
        for v in seg_of.iter_mut() {
            if *v == 0 {
                *v = 1;
            }
        }

        // Junctions sit at part boundaries. On a fence the two endpoints are
        // unshared; on a circular fence x_1 is the wrap junction.
        let mut shared_tops = Vec::new();
        let mut shared_bottoms = Vec::new();
        let mut seg_unshared = vec![Vec::new(); s];
        if composition.is_proper() {
            let mut b = 0usize;
            for i in 1..=s {
                let p = composition.parts()[i - 1] as usize;
                let junction_node = wrap(b + p + 1);
                let is_interior = i < s || kind == PosetKind::Circular;
                if is_interior {
                    let j = Junction {
                        node: junction_node,
                        left_seg: i,
                        right_seg: if i < s { i + 1 } else { 1 },
                    };
                    if i % 2 == 1 {
                        shared_tops.push(j);
                    } else {
                        shared_bottoms.push(j);
                    }
                }
                // interior nodes of segment i, from lowest to highest
                let inner: Vec<usize> = (b + 2..=b + p).map(wrap).collect();
                seg_unshared[i - 1] = if i % 2 == 1 {
                    inner
                } else {
                    inner.into_iter().rev().collect()
                };
                b += p;
            }
        }

        Ok(ZigzagPoset {
            kind,
            composition,
            node_count,
            covers,
            lower_adj,
            upper_adj,
            seg_of,
            shared_tops,
            shared_bottoms,
            seg_unshared,
        })
    }

    pub fn kind(&self) -> PosetKind {
        self.kind
    }

    pub fn composition(&self) -> &Composition {
        &self.composition
    }

    pub fn node_count(&self) -> usize {
        self.node_count
    }

    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    /// Segment of a node; shared nodes report the lower-indexed segment.
    pub fn segment_of(&self, node: usize) -> usize {
        self.seg_of[node - 1]
    }

    pub fn shared_tops(&self) -> &[Junction] {
        &self.shared_tops
    }

    pub fn shared_bottoms(&self) -> &[Junction] {
        &self.shared_bottoms
    }

    /// Unshared nodes of segment i (1-based), from lowest to highest.
    pub fn segment_unshared(&self, seg: usize) -> &[usize] {
        &self.seg_unshared[seg - 1]
    }

    pub fn lower_covers(&self, node: usize) -> &[usize] {
        &self.lower_adj[node - 1]
    }

    pub fn upper_covers(&self, node: usize) -> &[usize] {
        &self.upper_adj[node - 1]
    }

    pub fn is_ideal(&self, set: IdealSet) -> bool {
        self.covers
            .iter()
            .all(|&(lo, hi)| !set.contains(hi) || set.contains(lo))
    }

    pub fn full_ideal(&self) -> IdealSet {
        IdealSet((1u64 << self.node_count) - 1)
    }

    /// Nodes of `set` with no upper cover inside `set`.
    pub fn maximal_elements(&self, set: IdealSet) -> Vec<usize> {
        set.nodes()
            .filter(|&v| self.upper_covers(v).iter().all(|&u| !set.contains(u)))
            .collect()
    }

    /// Minimal elements of the complement of an ideal: the nodes that can be
    /// added while staying downward closed.
    pub fn addable_nodes(&self, set: IdealSet) -> Vec<usize> {
        (1..=self.node_count)
            .filter(|&v| !set.contains(v))
            .filter(|&v| self.lower_covers(v).iter().all(|&l| set.contains(l)))
            .collect()
    }

    /// Everything below (and including) the given nodes.
    pub fn down_closure(&self, nodes: &[usize]) -> IdealSet {
        let mut out = IdealSet::empty();
        let mut stack: Vec<usize> = nodes.to_vec();
        while let Some(v) = stack.pop() {
            if out.contains(v) {
                continue;
            }
            out.insert(v);
            stack.extend_from_slice(self.lower_covers(v));
        }
        out
    }

    /// Everything above (and including) the given nodes.
    pub fn up_closure(&self, nodes: &[usize]) -> IdealSet {
        let mut out = IdealSet::empty();
        let mut stack: Vec<usize> = nodes.to_vec();
        while let Some(v) = stack.pop() {
            if out.contains(v) {
                continue;
            }
            out.insert(v);
            stack.extend_from_slice(self.upper_covers(v));
        }
        out
    }

    /// Every lower order ideal, sorted by (size, mask), produced by a
    /// breadth-first closure over the ideal lattice: grow each ideal by one
    /// addable node at a time and deduplicate by mask.
    pub fn enumerate_ideals(&self) -> Result<Vec<IdealSet>, Error> {
        self.enumerate_ideals_bounded(IDEAL_ENUM_BOUND)
    }

    pub fn enumerate_ideals_bounded(&self, bound: usize) -> Result<Vec<IdealSet>, Error> {
        if self.node_count > bound {
            return Err(Error::EnumerationBound {
                nodes: self.node_count,
                bound,
            });
        }
        let mut seen = HashSet::new();
        let mut queue = vec![IdealSet::empty()];
        seen.insert(IdealSet::empty());
        let mut head = 0;
        while head < queue.len() {
            let cur = queue[head];
            head += 1;
            for v in self.addable_nodes(cur) {
                let mut next = cur;
                next.insert(v);
                if seen.insert(next) {
                    queue.push(next);
                }
            }
        }
        queue.sort_by_key(|i| (i.size(), i.0));
        Ok(queue)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn comp(s: &str) -> Composition {
        s.parse().unwrap()
    }

    #[test]
    fn fence_2113_covers() {
        let p = fence(&comp("2,1,1,3")).unwrap();
        assert_eq!(p.node_count(), 8);
        let mut covers = p.covers().to_vec();
        covers.sort();
        assert_eq!(
            covers,
            vec![(1, 2), (2, 3), (4, 3), (4, 5), (6, 5), (7, 6), (8, 7)]
        );
        assert_eq!(p.segment_of(1), 1);
        assert_eq!(p.segment_of(3), 1); // shared top reports lower segment
        assert_eq!(p.segment_of(4), 2);
        assert_eq!(p.segment_of(8), 4);
    }

    #[test]
    fn single_parts_are_chains() {
        let p = fence(&comp("1")).unwrap();
        assert_eq!(p.node_count(), 2);
        assert_eq!(p.covers(), &[(1, 2)]);
        let p = fence(&comp("3")).unwrap();
        assert_eq!(p.node_count(), 4);
        assert_eq!(p.covers(), &[(1, 2), (2, 3), (3, 4)]);
    }

    #[test]
    fn circular_2113() {
        let p = circular_fence(&comp("2,1,1,3")).unwrap();
        assert_eq!(p.node_count(), 7);
        // wrap cover: x_7 >= x_8 = x_1
        assert!(p.covers().contains(&(1, 7)));
        assert_eq!(p.covers().len(), 7);
        assert_eq!(p.shared_tops().len(), 2);
        assert_eq!(p.shared_bottoms().len(), 2);
    }

    #[test]
    fn half_open_fences_build() {
        let down = Composition::half_open(vec![0, 2]).unwrap();
        let p = fence(&down).unwrap();
        assert_eq!(p.node_count(), 3);
        let mut covers = p.covers().to_vec();
        covers.sort();
        assert_eq!(covers, vec![(2, 1), (3, 2)]);
        // trailing zero part adds no covers
        let open_end = Composition::half_open(vec![2, 0]).unwrap();
        let p = fence(&open_end).unwrap();
        assert_eq!(p.node_count(), 3);
        assert_eq!(p.covers().len(), 2);
    }

    #[test]
    fn circular_rejects_odd_parts() {
        assert!(circular_fence(&comp("2,1,1")).is_err());
        assert!(circular_fence(&comp("3")).is_err());
    }

    #[test]
    fn smallest_circular_fence() {
        let p = circular_fence(&comp("1,1")).unwrap();
        assert_eq!(p.node_count(), 2);
        assert_eq!(p.covers(), &[(1, 2)]); // the two relations coincide
        assert_eq!(p.enumerate_ideals().unwrap().len(), 3);
    }

    #[test]
    fn circular_48_shape() {
        let p = circular_fence(&comp("4,8")).unwrap();
        assert_eq!(p.node_count(), 12);
        assert_eq!(p.shared_tops().len(), 1);
        assert_eq!(p.shared_bottoms().len(), 1);
        assert_eq!(p.enumerate_ideals().unwrap().len(), 34); // ab + 2
    }

    #[test]
    fn is_ideal_examples() {
        let p = fence(&comp("2,1,1,3")).unwrap();
        assert!(p.is_ideal(IdealSet::from_nodes(&[1, 4])));
        assert!(p.is_ideal(IdealSet::empty()));
        assert!(!p.is_ideal(IdealSet::from_nodes(&[2])));
    }

    #[test]
    fn ideal_counts_match_known_rank_sequences() {
        let p = fence(&comp("2,1,1,3")).unwrap();
        let ideals = p.enumerate_ideals().unwrap();
        assert_eq!(ideals.len(), 32);
        let mut by_size = vec![0usize; 9];
        for i in &ideals {
            by_size[i.size() as usize] += 1;
        }
        assert_eq!(by_size, vec![1, 3, 5, 6, 6, 5, 3, 2, 1]);

        let c = circular_fence(&comp("2,1,1,3")).unwrap();
        let ideals = c.enumerate_ideals().unwrap();
        assert_eq!(ideals.len(), 20);
        let mut by_size = vec![0usize; 8];
        for i in &ideals {
            by_size[i.size() as usize] += 1;
        }
        assert_eq!(by_size, vec![1, 2, 3, 4, 4, 3, 2, 1]);
    }

    #[test]
    fn enumeration_respects_bound() {
        let p = fence(&comp("24")).unwrap();
        assert!(matches!(
            p.enumerate_ideals(),
            Err(Error::EnumerationBound { .. })
        ));
    }

    /// The lattice BFS must agree with brute-force filtering of all subsets.
    #[test]
    fn bfs_matches_subset_filter() {
        for s in ["1", "2,1,1,3", "1,1,1,1,1", "3,2,4", "2,2,2,2"] {
            let c = comp(s);
            for p in [Some(fence(&c).unwrap()), circular_fence(&c).ok()]
                .into_iter()
                .flatten()
            {
                let bfs = p.enumerate_ideals().unwrap();
                let brute: Vec<IdealSet> = (0..1u64 << p.node_count())
                    .map(IdealSet)
                    .filter(|&m| p.is_ideal(m))
                    .collect();
                assert_eq!(bfs.len(), brute.len(), "{s}");
                let bfs_set: HashSet<_> = bfs.iter().copied().collect();
                assert!(brute.iter().all(|m| bfs_set.contains(m)), "{s}");
            }
        }
    }

    /// Ideals form a lattice: unions and intersections of ideals are ideals.
    #[test]
    fn ideals_closed_under_meet_and_join() {
        let p = circular_fence(&comp("2,1,1,3")).unwrap();
        let ideals = p.enumerate_ideals().unwrap();
        let set: HashSet<_> = ideals.iter().copied().collect();
        for &a in &ideals {
            for &b in &ideals {
                assert!(set.contains(&IdealSet(a.0 | b.0)));
                assert!(set.contains(&IdealSet(a.0 & b.0)));
            }
        }
    }

    #[test]
    fn segment_unshared_ordering() {
        let p = circular_fence(&comp("3,1,3,1")).unwrap();
        // segment 1 ascends: unshared nodes in ascending node order
        assert_eq!(p.segment_unshared(1), &[2, 3]);
        // segment 3 ascends from the valley after segment 2
        assert_eq!(p.segment_unshared(3), &[6, 7]);
        // size-1 segments have no unshared nodes
        assert!(p.segment_unshared(2).is_empty());
        assert!(p.segment_unshared(4).is_empty());
    }
}
