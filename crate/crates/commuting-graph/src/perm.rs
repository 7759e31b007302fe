//! Permutations of a fixed domain `{0, .., n-1}` stored as image tables,
//! with cycle-notation text I/O.
//!
//! Permutations act on the right and compose left-to-right:
//! `compose(p, q)` maps `i` to `q(p(i))`. Under this convention the
//! conjugate `x^g` is `compose(compose(g.inverse(), x), g)`, which is what
//! every conjugacy computation in this crate uses.
//!
//! Points are 0-based everywhere in the API; cycle notation uses 1-based
//! labels, so `"(1,2)"` swaps the points 0 and 1.

use std::fmt;

use thiserror::Error;

/// Errors from permutation arithmetic.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PermError {
    /// Two permutations of different degrees were combined.
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),
    /// An image table that is not a bijection of `0..n`.
    #[error("images do not form a bijection of 0..{0}")]
    NotABijection(usize),
}

/// Error from parsing cycle notation, with the byte position of the offence.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("cycle notation error at position {position}: {message}")]
pub struct ParseCyclesError {
    pub position: usize,
    pub message: String,
}

/// A bijection of `{0, .., n-1}`, stored as the table of images.
///
/// Equality and hashing are by image table, so permutations of different
/// degrees are never equal even when they move the same points.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Box<[u16]>,
}

impl Permutation {
    /// The identity on `n` points.
    pub fn identity(n: usize) -> Permutation {
        Permutation {
            images: (0..n as u16).collect(),
        }
    }

    /// Builds a permutation from its image table, validating bijectivity.
    pub fn from_images(images: Vec<u16>) -> Result<Permutation, PermError> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if (x as usize) >= n || seen[x as usize] {
                return Err(PermError::NotABijection(n));
            }
            seen[x as usize] = true;
        }
        Ok(Permutation {
            images: images.into_boxed_slice(),
        })
    }

    pub(crate) fn from_images_unchecked(images: Vec<u16>) -> Permutation {
        debug_assert!(Permutation::from_images(images.clone()).is_ok());
        Permutation {
            images: images.into_boxed_slice(),
        }
    }

    /// Domain size.
    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of a point.
    #[inline]
    pub fn apply(&self, point: usize) -> usize {
        self.images[point] as usize
    }

    /// The raw image table.
    pub fn images(&self) -> &[u16] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x as usize)
    }

    /// First point moved, or `None` for the identity.
    pub fn first_moved_point(&self) -> Option<usize> {
        self.images
            .iter()
            .enumerate()
            .find(|&(i, &x)| i != x as usize)
            .map(|(i, _)| i)
    }

    /// Left-to-right composition: the result maps `i` to `q(p(i))`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation, PermError> {
        if self.degree() != other.degree() {
            return Err(PermError::DegreeMismatch(self.degree(), other.degree()));
        }
        Ok(self.compose_unchecked(other))
    }

    #[inline]
    pub(crate) fn compose_unchecked(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        let images = self.images.iter().map(|&x| other.images[x as usize]).collect();
        Permutation { images }
    }

    /// Composes into a scratch buffer, avoiding an allocation.
    #[inline]
    pub(crate) fn compose_into(&self, other: &Permutation, out: &mut Vec<u16>) {
        debug_assert_eq!(self.degree(), other.degree());
        out.clear();
        out.extend(self.images.iter().map(|&x| other.images[x as usize]));
    }

    /// The inverse permutation: `compose(p, p.inverse())` is the identity.
    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u16; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x as usize] = i as u16;
        }
        Permutation {
            images: inv.into_boxed_slice(),
        }
    }

    /// The conjugate `g^-1 * self * g` (left-to-right products).
    pub fn conjugated_by(&self, g: &Permutation) -> Result<Permutation, PermError> {
        if self.degree() != g.degree() {
            return Err(PermError::DegreeMismatch(self.degree(), g.degree()));
        }
        let mut out = vec![0u16; self.degree()];
        self.conjugate_into(g, &mut out);
        Ok(Permutation {
            images: out.into_boxed_slice(),
        })
    }

    /// Writes the image table of `g^-1 * self * g` into `out` without
    /// materializing `g^-1`: the conjugate maps `g(i)` to `g(self(i))`.
    #[inline]
    pub(crate) fn conjugate_into(&self, g: &Permutation, out: &mut [u16]) {
        debug_assert_eq!(self.degree(), g.degree());
        debug_assert_eq!(self.degree(), out.len());
        for i in 0..self.images.len() {
            out[g.images[i] as usize] = g.images[self.images[i] as usize];
        }
    }

    /// `self` raised to a non-negative power.
    pub fn pow(&self, mut k: u64) -> Permutation {
        let mut acc = Permutation::identity(self.degree());
        let mut base = self.clone();
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.compose_unchecked(&base);
            }
            base = base.compose_unchecked(&base);
            k >>= 1;
        }
        acc
    }

    /// The order of the permutation: the lcm of its cycle lengths.
    ///
    /// Panics if the order exceeds `u64` (possible for degrees in the
    /// hundreds; far beyond the enumerable range this crate targets).
    pub fn order(&self) -> u64 {
        let mut seen = vec![false; self.images.len()];
        let mut order: u128 = 1;
        for start in 0..self.images.len() {
            if seen[start] {
                continue;
            }
            let mut len: u128 = 0;
            let mut j = start;
            while !seen[j] {
                seen[j] = true;
                j = self.images[j] as usize;
                len += 1;
            }
            order = order / gcd(order as u64, len as u64) as u128 * len;
            assert!(order <= u64::MAX as u128, "permutation order exceeds u64");
        }
        order as u64
    }

    /// Whether the two permutations commute.
    pub fn commutes_with(&self, other: &Permutation) -> Result<bool, PermError> {
        if self.degree() != other.degree() {
            return Err(PermError::DegreeMismatch(self.degree(), other.degree()));
        }
        Ok(self.commutes_with_unchecked(other))
    }

    #[inline]
    pub(crate) fn commutes_with_unchecked(&self, other: &Permutation) -> bool {
        let p = &self.images;
        let q = &other.images;
        (0..p.len()).all(|i| q[p[i] as usize] == p[q[i] as usize])
    }

    /// The cycles of length at least 2, each rotated to start at its
    /// smallest point and listed by smallest point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.images.len()];
        let mut out = Vec::new();
        for start in 0..self.images.len() {
            if seen[start] || self.images[start] as usize == start {
                continue;
            }
            let mut cycle = Vec::new();
            let mut j = start;
            while !seen[j] {
                seen[j] = true;
                cycle.push(j);
                j = self.images[j] as usize;
            }
            out.push(cycle);
        }
        out
    }

    /// Renders in 1-based cycle notation; the identity prints as `"()"`.
    pub fn cycle_string(&self) -> String {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return "()".to_string();
        }
        let mut s = String::new();
        for cycle in cycles {
            s.push('(');
            for (k, &pt) in cycle.iter().enumerate() {
                if k > 0 {
                    s.push(',');
                }
                s.push_str(&(pt + 1).to_string());
            }
            s.push(')');
        }
        s
    }

    /// Parses whitespace-tolerant 1-based cycle notation, e.g. `"(1,2,3)(4,5)"`.
    ///
    /// `"()"` denotes the identity. Out-of-range points, repeated points and
    /// malformed brackets are reported with the byte position.
    pub fn parse_cycles(text: &str, degree: usize) -> Result<Permutation, ParseCyclesError> {
        let bytes = text.as_bytes();
        let err = |position: usize, message: &str| ParseCyclesError {
            position,
            message: message.to_string(),
        };
        let mut images: Vec<u16> = (0..degree as u16).collect();
        let mut used = vec![false; degree];
        let mut pos = 0usize;
        let skip_ws = |pos: &mut usize| {
            while *pos < bytes.len() && bytes[*pos].is_ascii_whitespace() {
                *pos += 1;
            }
        };
        skip_ws(&mut pos);
        while pos < bytes.len() {
            if bytes[pos] != b'(' {
                return Err(err(pos, "expected '('"));
            }
            let open = pos;
            pos += 1;
            skip_ws(&mut pos);
            let mut cycle: Vec<usize> = Vec::new();
            loop {
                if pos < bytes.len() && bytes[pos] == b')' {
                    if cycle.is_empty() {
                        pos += 1;
                        break; // "()" is the identity cycle
                    }
                    return Err(err(pos, "expected a point after ','"));
                }
                let start = pos;
                while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                    pos += 1;
                }
                if pos == start {
                    return Err(err(start, "expected a point label"));
                }
                let label: usize = text[start..pos]
                    .parse()
                    .map_err(|_| err(start, "point label out of range"))?;
                if label == 0 || label > degree {
                    return Err(err(
                        start,
                        &format!("point {label} out of range 1..={degree}"),
                    ));
                }
                if used[label - 1] {
                    return Err(err(start, &format!("point {label} repeated")));
                }
                used[label - 1] = true;
                cycle.push(label - 1);
                skip_ws(&mut pos);
                match bytes.get(pos) {
                    Some(b',') => {
                        pos += 1;
                        skip_ws(&mut pos);
                    }
                    Some(b')') => {
                        pos += 1;
                        break;
                    }
                    Some(_) => return Err(err(pos, "expected ',' or ')'")),
                    None => return Err(err(open, "unclosed '('")),
                }
            }
            for (k, &pt) in cycle.iter().enumerate() {
                images[pt] = cycle[(k + 1) % cycle.len()] as u16;
            }
            skip_ws(&mut pos);
        }
        Ok(Permutation {
            images: images.into_boxed_slice(),
        })
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.cycle_string())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({})", self.cycle_string())
    }
}

pub(crate) fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}
