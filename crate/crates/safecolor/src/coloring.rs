//! Vertex colorings: a total assignment of colors `1..=k` to vertices `0..n`.
//! A coloring here is not required to be proper.

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ColoringError {
    #[error("color count k must be positive")]
    ZeroColors,
    #[error("vertex {vertex} has color {color}, outside 1..={k}")]
    ColorOutOfRange { vertex: usize, color: u32, k: u32 },
}

/// A total coloring of vertices `0..n` with colors `1..=k`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Coloring {
    k: u32,
    assignment: Vec<u32>,
}

impl Coloring {
    /// Validates that every color lies in `1..=k`.
    pub fn new(k: u32, assignment: Vec<u32>) -> Result<Self, ColoringError> {
        if k == 0 {
            return Err(ColoringError::ZeroColors);
        }
        for (vertex, &color) in assignment.iter().enumerate() {
            if color == 0 || color > k {
                return Err(ColoringError::ColorOutOfRange { vertex, color, k });
            }
        }
        Ok(Coloring { k, assignment })
    }

    /// All vertices the same color; `color` must be in `1..=k`.
    pub fn constant(k: u32, n: usize, color: u32) -> Result<Self, ColoringError> {
        Coloring::new(k, vec![color; n])
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    /// Number of colored vertices.
    pub fn len(&self) -> usize {
        self.assignment.len()
    }

    pub fn is_empty(&self) -> bool {
        self.assignment.is_empty()
    }

    pub fn color(&self, v: usize) -> u32 {
        self.assignment[v]
    }

    pub fn iter(&self) -> impl Iterator<Item = u32> + '_ {
        self.assignment.iter().copied()
    }

    /// How many vertices carry each color; index 0 is unused.
    pub fn color_counts(&self) -> Vec<usize> {
        let mut counts = vec![0usize; self.k as usize + 1];
        for &c in &self.assignment {
            counts[c as usize] += 1;
        }
        counts
    }

    /// Applies a color permutation given as `perm[c]` for `c` in `1..=k`
    /// (index 0 ignored).
    pub fn permute_colors(&self, perm: &[u32]) -> Result<Self, ColoringError> {
        let mapped = self.assignment.iter().map(|&c| perm[c as usize]).collect();
        Coloring::new(self.k, mapped)
    }

    /// Re-indexes vertices: new vertex `v` gets the color of `new_to_old[v]`.
    pub fn relabel_vertices(&self, new_to_old: &[usize]) -> Self {
        let assignment = new_to_old.iter().map(|&old| self.assignment[old]).collect();
        Coloring {
            k: self.k,
            assignment,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn new_validates_color_range() {
        assert!(Coloring::new(3, vec![1, 2, 3]).is_ok());
        assert_eq!(
            Coloring::new(3, vec![1, 0]),
            Err(ColoringError::ColorOutOfRange {
                vertex: 1,
                color: 0,
                k: 3
            })
        );
        assert_eq!(
            Coloring::new(2, vec![3]),
            Err(ColoringError::ColorOutOfRange {
                vertex: 0,
                color: 3,
                k: 2
            })
        );
        assert_eq!(Coloring::new(0, vec![]), Err(ColoringError::ZeroColors));
    }

    #[test]
    fn permute_and_relabel() {
        let c = Coloring::new(3, vec![1, 2, 3, 1]).unwrap();
        // Swap colors 1 and 3.
        let p = c.permute_colors(&[0, 3, 2, 1]).unwrap();
        assert_eq!(p.iter().collect::<Vec<_>>(), vec![3, 2, 1, 3]);
        // Reverse the vertex order.
        let r = c.relabel_vertices(&[3, 2, 1, 0]);
        assert_eq!(r.iter().collect::<Vec<_>>(), vec![1, 3, 2, 1]);
    }

    #[test]
    fn color_counts_tally() {
        let c = Coloring::new(3, vec![1, 1, 2]).unwrap();
        assert_eq!(c.color_counts(), vec![0, 2, 1, 0]);
    }
}
