use std::fmt;

use crate::error::{Error, Result};

/// A permutation of `1..=n`, stored as its one-line images.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Permutation {
        Permutation { images: (1..=n).collect() }
    }

    /// From one-line notation: `images[k]` is the image of `k + 1`.
    pub fn from_images(images: Vec<usize>) -> Result<Permutation> {
        let n = images.len();
        let mut seen = vec![false; n + 1];
        for &i in &images {
            if i == 0 || i > n || seen[i] {
                return Err(Error::InvalidArgument(format!("{images:?} is not a permutation")));
            }
            seen[i] = true;
        }
        Ok(Permutation { images })
    }

    /// The cycle `(c0 c1 ... ck)` in `S_n`.
    pub fn cycle(n: usize, cycle: &[usize]) -> Result<Permutation> {
        let mut images: Vec<usize> = (1..=n).collect();
        for (k, &a) in cycle.iter().enumerate() {
            let b = cycle[(k + 1) % cycle.len()];
            if a == 0 || a > n || b == 0 || b > n {
                return Err(Error::InvalidArgument(format!("cycle entry out of range 1..={n}")));
            }
            images[a - 1] = b;
        }
        Permutation::from_images(images)
    }

    pub fn transposition(n: usize, i: usize, j: usize) -> Permutation {
        let mut images: Vec<usize> = (1..=n).collect();
        images.swap(i - 1, j - 1);
        Permutation { images }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// `self ∘ other`: first `other`, then `self`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.degree(), other.degree());
        Permutation { images: other.images.iter().map(|&i| self.apply(i)).collect() }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.images.len()];
        for (k, &i) in self.images.iter().enumerate() {
            images[i - 1] = k + 1;
        }
        Permutation { images }
    }

    /// All of `S_n` in lexicographic order of one-line notation.
    pub fn all(n: usize) -> impl Iterator<Item = Permutation> {
        let mut next: Option<Vec<usize>> = Some((1..=n).collect());
        std::iter::from_fn(move || {
            let cur = next.take()?;
            let mut a = cur.clone();
            // standard next-permutation step
            if let Some(i) = (1..a.len()).rev().find(|&i| a[i - 1] < a[i]) {
                let j = (i..a.len()).rev().find(|&j| a[j] > a[i - 1]).unwrap();
                a.swap(i - 1, j);
                a[i..].reverse();
                next = Some(a);
            }
            Some(Permutation { images: cur })
        })
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation{:?}", self.images)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enumerates_symmetric_group() {
        assert_eq!(Permutation::all(0).count(), 1);
        assert_eq!(Permutation::all(4).count(), 24);
        let all: Vec<_> = Permutation::all(3).map(|p| p.images().to_vec()).collect();
        assert_eq!(all[0], [1, 2, 3]);
        assert_eq!(all[5], [3, 2, 1]);
    }

    #[test]
    fn compose_and_inverse() {
        let s = Permutation::cycle(3, &[1, 2, 3]).unwrap();
        assert_eq!(s.images(), [2, 3, 1]);
        assert_eq!(s.compose(&s.inverse()), Permutation::identity(3));
        let t = Permutation::transposition(3, 1, 2);
        assert_eq!(s.compose(&t).apply(1), s.apply(t.apply(1)));
        assert!(Permutation::from_images(vec![1, 1]).is_err());
    }
}
