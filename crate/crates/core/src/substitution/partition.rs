//! Partitions of a forest into aromatic trees.

use crate::forest::AromaticForest;
use crate::memo::Memo;
use std::sync::{Arc, LazyLock};

static PARTITIONS: LazyLock<Memo<AromaticForest, Vec<TreePartition>>> = LazyLock::new(Memo::new);

/// A partition of the vertices of a forest into blocks, each inducing an
/// aromatic tree, obtained by cutting `cut` edges and attaching every
/// remaining rootless component to one rooted piece.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreePartition {
    /// Aromatic tree induced on each block.
    pub blocks: Vec<AromaticForest>,
    /// Block index of every canonical vertex.
    pub block_of: Vec<usize>,
    /// Sources of the cut edges, ascending.
    pub cut: Vec<usize>,
    /// One vertex per block, one edge per cut edge.
    pub skeleton: AromaticForest,
}

impl TreePartition {
    /// Number of blocks, equal to the size of the skeleton.
    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    /// The partition with a single block and no cut edges.
    pub fn is_trivial(&self) -> bool {
        self.blocks.len() == 1 && self.cut.is_empty()
    }
}

/// All partitions of `phi` into aromatic trees. Different cut sets are
/// different partitions even when they induce the same blocks.
pub fn tree_partitions(phi: &AromaticForest) -> Arc<Vec<TreePartition>> {
    PARTITIONS.get_or_insert_with(phi, || enumerate(phi))
}

fn enumerate(phi: &AromaticForest) -> Vec<TreePartition> {
    let succ = phi.successors();
    let edges: Vec<usize> = (0..succ.len()).filter(|&v| succ[v].is_some()).collect();
    let mut out = Vec::new();
    for mask in 0u64..(1u64 << edges.len()) {
        let cut: Vec<usize> = edges
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &v)| v)
            .collect();
        let mut kept = succ.to_vec();
        for &v in &cut {
            kept[v] = None;
        }
        let (piece_of, rooted, rootless) = pieces(&kept);
        if rooted.is_empty() && !rootless.is_empty() {
            continue;
        }
        // Every assignment of the rootless pieces to rooted pieces.
        let mut choice = vec![0usize; rootless.len()];
        loop {
            let mut block_of = vec![usize::MAX; succ.len()];
            for v in 0..succ.len() {
                let p = piece_of[v];
                block_of[v] = match rooted.iter().position(|&r| r == p) {
                    Some(b) => b,
                    None => {
                        choice[rootless
                            .iter()
                            .position(|&r| r == p)
                            .expect("piece is rooted or rootless")]
                    }
                };
            }
            out.push(build(succ, &kept, &cut, block_of, rooted.len()));
            let mut i = 0;
            while i < choice.len() {
                choice[i] += 1;
                if choice[i] < rooted.len() {
                    break;
                }
                choice[i] = 0;
                i += 1;
            }
            if i == choice.len() {
                break;
            }
        }
    }
    out
}

/// Weakly connected pieces of a successor array: the piece of each vertex,
/// the pieces containing a root and the pieces without one.
fn pieces(succ: &[Option<usize>]) -> (Vec<usize>, Vec<usize>, Vec<usize>) {
    let n = succ.len();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], v: usize) -> usize {
        let mut r = v;
        while parent[r] != r {
            r = parent[r];
        }
        let mut u = v;
        while parent[u] != r {
            let next = parent[u];
            parent[u] = r;
            u = next;
        }
        r
    }
    for (v, s) in succ.iter().enumerate() {
        if let Some(h) = *s {
            let (a, b) = (find(&mut parent, v), find(&mut parent, h));
            parent[a.max(b)] = a.min(b);
        }
    }
    let piece_of: Vec<usize> = (0..n).map(|v| find(&mut parent, v)).collect();
    let mut rooted: Vec<usize> = (0..n)
        .filter(|&v| succ[v].is_none())
        .map(|v| piece_of[v])
        .collect();
    rooted.sort_unstable();
    let mut rootless: Vec<usize> = (0..n)
        .filter(|&v| parent[v] == v && !rooted.contains(&v))
        .collect();
    rootless.sort_unstable();
    (piece_of, rooted, rootless)
}

fn build(
    succ: &[Option<usize>],
    kept: &[Option<usize>],
    cut: &[usize],
    block_of: Vec<usize>,
    count: usize,
) -> TreePartition {
    let blocks = (0..count)
        .map(|b| {
            let members: Vec<usize> = (0..succ.len()).filter(|&v| block_of[v] == b).collect();
            let local: Vec<Option<usize>> = members
                .iter()
                .map(|&v| {
                    kept[v].map(|h| {
                        members
                            .iter()
                            .position(|&u| u == h)
                            .expect("kept edges stay inside a block")
                    })
                })
                .collect();
            AromaticForest::from_successors(&local)
        })
        .collect();
    let mut quotient = vec![None; count];
    for &v in cut {
        let h = succ[v].expect("cut edges leave their source");
        quotient[block_of[v]] = Some(block_of[h]);
    }
    TreePartition {
        blocks,
        block_of,
        cut: cut.to_vec(),
        skeleton: AromaticForest::from_successors(&quotient),
    }
}

/// The skeleton of a partition: the quotient graph collapsing each block.
pub fn skeleton(partition: &TreePartition) -> AromaticForest {
    partition.skeleton.clone()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(s: &str) -> AromaticForest {
        s.parse().unwrap()
    }

    fn summary(s: &str) -> Vec<(Vec<String>, String)> {
        let mut v: Vec<_> = tree_partitions(&f(s))
            .iter()
            .map(|p| {
                let mut blocks: Vec<String> = p.blocks.iter().map(|b| b.render()).collect();
                blocks.sort();
                (blocks, p.skeleton.render())
            })
            .collect();
        v.sort();
        v
    }

    #[test]
    fn examples() {
        assert_eq!(summary("b"), [(vec!["b".to_string()], "b".to_string())]);
        assert_eq!(
            summary("b[b]"),
            [
                (vec!["b".to_string(), "b".to_string()], "b[b]".to_string()),
                (vec!["b[b]".to_string()], "b".to_string())
            ]
        );
        assert_eq!(summary("<b>"), [(vec!["b".to_string()], "<b>".to_string())]);
        assert_eq!(summary("1"), [(vec![], "1".to_string())]);
    }

    #[test]
    fn two_cycle_has_two_single_cut_partitions() {
        let parts = tree_partitions(&f("<b,b>"));
        assert_eq!(parts.len(), 3);
        let single: Vec<_> = parts.iter().filter(|p| p.len() == 1).collect();
        assert_eq!(single.len(), 2);
        assert_eq!(single[0].block_of, single[1].block_of);
        assert!(single
            .iter()
            .all(|p| p.skeleton.render() == "<b>" && p.blocks[0].render() == "b[b]"));
    }

    #[test]
    fn rootless_pieces_attach_anywhere() {
        // <b> b b: the loop joins either tree, or is cut into its own block.
        let s = summary("<b> b b");
        assert!(s.contains(&(
            vec!["<b> b".to_string(), "b".to_string()],
            "b b".to_string()
        )));
        assert_eq!(s.iter().filter(|(_, k)| k == "b b").count(), 2);
        assert_eq!(s.iter().filter(|(_, k)| k == "<b> b b").count(), 1);
    }

    #[test]
    fn blocks_are_aromatic_trees_and_skeleton_sizes_match() {
        for phi in crate::forest::enumerate_up_to(5, crate::ForestFilter::All) {
            for p in tree_partitions(&phi).iter() {
                assert!(p.blocks.iter().all(|b| b.root_count() == 1), "{phi}");
                assert_eq!(p.skeleton.size(), p.blocks.len());
                assert_eq!(p.skeleton.root_count(), phi.root_count());
                assert_eq!(p.blocks.iter().map(|b| b.size()).sum::<usize>(), phi.size());
            }
        }
    }
}
