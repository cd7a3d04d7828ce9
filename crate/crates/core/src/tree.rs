//! The rooted symmetric tree of a radix sequence, used as an independent
//! check on the codec.
//!
//! The root has `k_r` children, each of those has `k_{r-1}` children, and so
//! on down to depth `r`. A vertex is named by the child indices on its path,
//! which read as digits are exactly a canonical numeral. Vertices are ranked
//! in preorder with siblings in increasing order and the root excluded.
//!
//! Nothing here goes through the place-value set or the division algorithm:
//! ranks come from subtree sizes counted off the radix sequence.

use std::fmt;
use std::fmt::Write as _;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::codec::FamilyNumeral;
use crate::error::{Error, Result};
use crate::radix::{PlaceValueSet, RadixSequence};

/// Largest tree [`enumerate`] materializes unless `DSNUM_SIZE_GUARD` says
/// otherwise.
pub const DEFAULT_SIZE_GUARD: u64 = 1_000_000;

/// The enumeration guard: `DSNUM_SIZE_GUARD` when set to a number, else
/// [`DEFAULT_SIZE_GUARD`].
pub fn size_guard() -> u64 {
    std::env::var("DSNUM_SIZE_GUARD")
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_SIZE_GUARD)
}

/// A non-root vertex, named by its path of child indices from the root.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TreeVertex {
    path: Vec<u64>,
}

impl TreeVertex {
    pub fn new(path: Vec<u64>, radix: &RadixSequence) -> Result<Self> {
        let r = radix.len();
        if path.is_empty() || path.len() > r {
            return Err(Error::invalid(format!(
                "path of length {} outside 1..={r}",
                path.len()
            )));
        }
        for (t, &i) in path.iter().enumerate() {
            let bound = radix.k(r - t);
            if i >= bound {
                return Err(Error::invalid(format!(
                    "child index {i} at depth {} must be below {bound}",
                    t + 1
                )));
            }
        }
        Ok(TreeVertex { path })
    }

    pub fn path(&self) -> &[u64] {
        &self.path
    }

    pub fn depth(&self) -> usize {
        self.path.len()
    }

    /// The canonical numeral spelled by the path.
    pub fn to_numeral(&self, system: &PlaceValueSet) -> Result<FamilyNumeral> {
        FamilyNumeral::canonical(system, self.path.clone())
    }

    /// The path as a digit string, dot-separated when some radix exceeds 10.
    pub fn label(&self, radix: &RadixSequence) -> String {
        label(&self.path, radix.max_radix() <= 10)
    }
}

impl fmt::Display for TreeVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&label(&self.path, self.path.iter().all(|&i| i < 10)))
    }
}

fn label(path: &[u64], contiguous: bool) -> String {
    let parts: Vec<String> = path.iter().map(|i| i.to_string()).collect();
    if contiguous {
        parts.concat()
    } else {
        parts.join(".")
    }
}

/// `sizes[t - 1]` is the number of vertices in the subtree of a depth-`t`
/// vertex, itself included.
fn subtree_sizes(radix: &RadixSequence) -> Vec<BigUint> {
    let r = radix.len();
    let mut sizes = vec![BigUint::one(); r];
    // a depth-t vertex has k_{r-t} children
    for t in (1..r).rev() {
        let below = sizes[t].clone();
        sizes[t - 1] = below * radix.k(r - t) + 1u32;
    }
    sizes
}

/// Number of non-root vertices.
pub fn vertex_count(radix: &RadixSequence) -> BigUint {
    let mut count = BigUint::zero();
    let mut width = BigUint::one();
    for level in (1..=radix.len()).rev() {
        width *= radix.k(level);
        count += &width;
    }
    count
}

fn check_guard(radix: &RadixSequence, guard: u64) -> Result<u64> {
    let count = vertex_count(radix);
    match count.to_u64() {
        Some(n) if n <= guard => Ok(n),
        _ => Err(Error::TooLarge {
            size: count.to_string(),
            guard,
        }),
    }
}

/// All non-root vertices in preorder, under the [`size_guard`].
pub fn enumerate(radix: &RadixSequence) -> Result<Vec<TreeVertex>> {
    enumerate_with_guard(radix, size_guard())
}

pub fn enumerate_with_guard(radix: &RadixSequence, guard: u64) -> Result<Vec<TreeVertex>> {
    let count = check_guard(radix, guard)?;
    let r = radix.len();
    let mut out = Vec::with_capacity(count as usize);
    // Depth-first walk; children are pushed in reverse so the smallest index
    // is visited first.
    let mut stack: Vec<Vec<u64>> = (0..radix.k(r)).rev().map(|i| vec![i]).collect();
    while let Some(path) = stack.pop() {
        let depth = path.len();
        if depth < r {
            for i in (0..radix.k(r - depth)).rev() {
                let mut child = path.clone();
                child.push(i);
                stack.push(child);
            }
        }
        out.push(TreeVertex { path });
    }
    Ok(out)
}

/// Preorder position of `vertex`: every earlier sibling subtree along the
/// path, plus one for each ancestor passed on the way down.
pub fn rank(vertex: &TreeVertex, radix: &RadixSequence) -> Result<BigUint> {
    let vertex = TreeVertex::new(vertex.path.clone(), radix)?;
    let sizes = subtree_sizes(radix);
    let mut position = BigUint::zero();
    for (t, &i) in vertex.path.iter().enumerate() {
        if t > 0 {
            // the parent itself
            position += 1u32;
        }
        position += &sizes[t] * i;
    }
    Ok(position)
}

/// The vertex at preorder position `n`.
pub fn unrank(n: &BigUint, radix: &RadixSequence) -> Result<TreeVertex> {
    let total = vertex_count(radix);
    if n >= &total {
        return Err(Error::OutOfRange {
            value: n.to_string(),
            max: (total - 1u32).to_string(),
        });
    }
    let sizes = subtree_sizes(radix);
    let mut left = n.clone();
    let mut path = Vec::new();
    for size in &sizes {
        let (i, rest) = left.div_rem(size);
        path.push(i.to_u64().expect("child index fits the radix"));
        if rest.is_zero() {
            break;
        }
        // step past the vertex itself into its subtree
        left = rest - 1u32;
    }
    Ok(TreeVertex { path })
}

/// DOT text of the tree: the root is `v` and every other vertex is labeled by
/// its digit string.
pub fn export_dot(radix: &RadixSequence) -> Result<String> {
    export_dot_with_guard(radix, size_guard())
}

pub fn export_dot_with_guard(radix: &RadixSequence, guard: u64) -> Result<String> {
    let vertices = enumerate_with_guard(radix, guard)?;
    let contiguous = radix.max_radix() <= 10;
    let mut out = String::new();
    writeln!(out, "digraph tree {{").unwrap();
    writeln!(out, "  v [label=\"v\"];").unwrap();
    // preorder: the parent of a vertex is the nearest earlier vertex one level up
    let mut ancestors: Vec<usize> = Vec::new();
    for (id, vertex) in vertices.iter().enumerate() {
        writeln!(out, "  n{id} [label=\"{}\"];", label(&vertex.path, contiguous)).unwrap();
        ancestors.truncate(vertex.depth() - 1);
        match ancestors.last() {
            None => writeln!(out, "  v -> n{id};").unwrap(),
            Some(parent) => writeln!(out, "  n{parent} -> n{id};").unwrap(),
        }
        ancestors.push(id);
    }
    writeln!(out, "}}").unwrap();
    Ok(out)
}

/// CSV of `rank,numeral` pairs in preorder.
pub fn export_csv(radix: &RadixSequence) -> Result<String> {
    let vertices = enumerate(radix)?;
    let contiguous = radix.max_radix() <= 10;
    let mut writer = csv::Writer::from_writer(Vec::new());
    writer
        .write_record(["rank", "numeral"])
        .expect("writing to memory");
    for (n, vertex) in vertices.iter().enumerate() {
        writer
            .write_record([n.to_string(), label(&vertex.path, contiguous)])
            .expect("writing to memory");
    }
    Ok(String::from_utf8(writer.into_inner().expect("flush to memory")).expect("utf-8"))
}
