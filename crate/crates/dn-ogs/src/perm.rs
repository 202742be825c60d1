//! Signed permutations of `±1..±n`.
//!
//! A [`SignedPerm`] stores only the images of `1..n`; the image of `-i` is
//! always `-π(i)` and is computed on demand. Products are taken left to
//! right, so `a.compose(&b)` applies `a` first: `(a·b)(i) = b(a(i))`.

use std::fmt;

use crate::error::{Error, Result};

/// Largest supported rank. Images are stored as `i32` and lengths as `u64`.
pub const MAX_RANK: usize = 1 << 16;

/// A signed permutation `π` of `{±1, ..., ±n}` in one-line notation.
///
/// # Examples
///
/// ```
/// use dn_ogs::perm::SignedPerm;
///
/// let a = SignedPerm::new(vec![3, 1, 2]).unwrap();
/// let b = SignedPerm::new(vec![2, 1, 3]).unwrap();
/// assert_eq!(a.compose(&b).unwrap().images(), &[3, 2, 1]);
/// assert_eq!(a.apply(-1), -3);
/// ```
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct SignedPerm {
    images: Vec<i32>,
}

/// Checks that `n` is a supported rank.
pub(crate) fn check_rank(n: usize) -> Result<()> {
    if (2..=MAX_RANK).contains(&n) {
        Ok(())
    } else {
        Err(Error::InvalidRank(n))
    }
}

impl SignedPerm {
    /// Builds a signed permutation from the images of `1..n`.
    ///
    /// Fails unless `n ≥ 2` and `{|images[i]|}` is exactly `{1, ..., n}`.
    pub fn new(images: Vec<i32>) -> Result<Self> {
        check_rank(images.len())?;
        let n = images.len();
        let mut seen = vec![false; n];
        for &v in &images {
            let a = v.unsigned_abs() as usize;
            if a == 0 || a > n || seen[a - 1] {
                return Err(Error::NotSignedPermutation(images));
            }
            seen[a - 1] = true;
        }
        Ok(SignedPerm { images })
    }

    /// Wraps images that are already known to be valid.
    pub(crate) fn from_images_unchecked(images: Vec<i32>) -> Self {
        debug_assert!(SignedPerm::new(images.clone()).is_ok());
        SignedPerm { images }
    }

    /// The identity of rank `n`.
    pub fn identity(n: usize) -> Result<Self> {
        check_rank(n)?;
        Ok(Self::identity_unchecked(n))
    }

    pub(crate) fn identity_unchecked(n: usize) -> Self {
        SignedPerm {
            images: (1..=n as i32).collect(),
        }
    }

    /// The rank `n`.
    pub fn rank(&self) -> usize {
        self.images.len()
    }

    /// The images `π(1), ..., π(n)`.
    pub fn images(&self) -> &[i32] {
        &self.images
    }

    /// Consumes the permutation and returns its images.
    pub fn into_images(self) -> Vec<i32> {
        self.images
    }

    /// The image of `x ∈ ±1..±n`, using `π(-x) = -π(x)`.
    ///
    /// # Panics
    ///
    /// Panics if `x` is zero or `|x| > n`.
    pub fn apply(&self, x: i32) -> i32 {
        let v = self.images[x.unsigned_abs() as usize - 1];
        if x < 0 {
            -v
        } else {
            v
        }
    }

    /// The left-to-right product `self · other`, i.e. `i ↦ other(self(i))`.
    pub fn compose(&self, other: &SignedPerm) -> Result<SignedPerm> {
        if self.rank() != other.rank() {
            return Err(Error::RankMismatch {
                left: self.rank(),
                right: other.rank(),
            });
        }
        Ok(self.then(other))
    }

    /// [`SignedPerm::compose`] without the rank check.
    pub(crate) fn then(&self, other: &SignedPerm) -> SignedPerm {
        SignedPerm {
            images: self.images.iter().map(|&v| other.apply(v)).collect(),
        }
    }

    /// The inverse element.
    pub fn inverse(&self) -> SignedPerm {
        let mut images = vec![0; self.rank()];
        for (i, &v) in self.images.iter().enumerate() {
            let pos = i as i32 + 1;
            images[v.unsigned_abs() as usize - 1] = if v > 0 { pos } else { -pos };
        }
        SignedPerm { images }
    }

    /// The unsigned projection `φ(π)(j) = |π(j)|`.
    pub fn phi(&self) -> SignedPerm {
        SignedPerm {
            images: self.images.iter().map(|v| v.abs()).collect(),
        }
    }

    /// Number of positions `i` with `π(i) < 0`.
    pub fn negative_count(&self) -> usize {
        self.images.iter().filter(|&&v| v < 0).count()
    }

    /// True iff the element lies in `D_n`, i.e. has an even number of negative images.
    pub fn is_d_element(&self) -> bool {
        self.negative_count().is_multiple_of(2)
    }

    /// True iff every image is positive, i.e. the element lies in `S_n`.
    pub fn is_unsigned(&self) -> bool {
        self.images.iter().all(|&v| v > 0)
    }

    /// True iff this is the identity.
    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| v == i as i32 + 1)
    }

    /// Descent positions `{i : π(i) > π(i+1)}` in `1..n-1`.
    pub fn descents(&self) -> Vec<usize> {
        (1..self.rank())
            .filter(|&i| self.images[i - 1] > self.images[i])
            .collect()
    }

    /// Number of pairs `i < j` with `π(i) > π(j)`.
    pub fn inversions(&self) -> u64 {
        let mut count = 0;
        for i in 0..self.rank() {
            for j in i + 1..self.rank() {
                if self.images[i] > self.images[j] {
                    count += 1;
                }
            }
        }
        count
    }
}

impl fmt::Display for SignedPerm {
    /// One-line notation such as `[-2,-1,-4,-3]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, v) in self.images.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("]")
    }
}

impl std::str::FromStr for SignedPerm {
    type Err = crate::text::ParseError;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        crate::text::parse_perm(s)
    }
}
