use std::collections::HashMap;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::function::Shape;
use crate::neighborhood::enumerate_all;

/// Largest arity accepted by [`build_hasse`].
pub const HASSE_LIMIT: usize = 5;

/// The full cover relation on antichain covers of `{1..p}`, computed from
/// up-set inclusion alone.
#[derive(Clone, Debug)]
pub struct HasseGraph {
    arity: usize,
    nodes: Vec<Shape>,
    index: HashMap<Shape, usize>,
    up_sets: Vec<u64>,
    parents: Vec<Vec<usize>>,
    children: Vec<Vec<usize>>,
}

/// Family of all subsets containing some clause, bit `x` for subset `x`.
fn up_set(shape: &Shape) -> u64 {
    let p = shape.arity();
    (1..(1u32 << p))
        .filter(|&x| shape.covers_mask(x))
        .fold(0, |m, x| m | 1 << x)
}

fn strict_subset(a: u64, b: u64) -> bool {
    a != b && a & !b == 0
}

pub fn build_hasse(p: usize) -> Result<HasseGraph> {
    if p > HASSE_LIMIT {
        return Err(Error::ArityTooLarge {
            arity: p,
            limit: HASSE_LIMIT,
        });
    }
    let nodes: Vec<Shape> = enumerate_all(p)?.collect();
    let up_sets: Vec<u64> = nodes.iter().map(up_set).collect();
    let parents: Vec<Vec<usize>> = (0..nodes.len())
        .into_par_iter()
        .map(|i| {
            let mut above: Vec<usize> = (0..nodes.len())
                .filter(|&j| strict_subset(up_sets[i], up_sets[j]))
                .collect();
            above.sort_by_key(|&j| up_sets[j].count_ones());
            let mut minimal: Vec<usize> = Vec::new();
            for j in above {
                if !minimal
                    .iter()
                    .any(|&k| strict_subset(up_sets[k], up_sets[j]))
                {
                    minimal.push(j);
                }
            }
            minimal.sort_unstable();
            minimal
        })
        .collect();
    let mut children = vec![Vec::new(); nodes.len()];
    for (i, ps) in parents.iter().enumerate() {
        for &j in ps {
            children[j].push(i);
        }
    }
    let index = nodes
        .iter()
        .cloned()
        .enumerate()
        .map(|(i, s)| (s, i))
        .collect();
    Ok(HasseGraph {
        arity: p,
        nodes,
        index,
        up_sets,
        parents,
        children,
    })
}

impl HasseGraph {
    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn nodes(&self) -> &[Shape] {
        &self.nodes
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn edge_count(&self) -> usize {
        self.parents.iter().map(Vec::len).sum()
    }

    pub fn index_of(&self, shape: &Shape) -> Option<usize> {
        self.index.get(shape).copied()
    }

    /// Edges as `(child, parent)` index pairs, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.parents
            .iter()
            .enumerate()
            .flat_map(|(i, ps)| ps.iter().map(move |&j| (i, j)))
            .collect()
    }

    pub fn parents_of(&self, i: usize) -> &[usize] {
        &self.parents[i]
    }

    pub fn children_of(&self, i: usize) -> &[usize] {
        &self.children[i]
    }

    /// Number of subsets in the up-set of node `i`, i.e. its true-state
    /// count under all-positive signs.
    pub fn up_set_size(&self, i: usize) -> u32 {
        self.up_sets[i].count_ones()
    }
}
