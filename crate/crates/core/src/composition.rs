//! Weak compositions: ordered tuples of non-negative integers with a fixed sum.

use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Composition {
    parts: Vec<u32>,
    partial_sums: Vec<u32>,
}

impl Composition {
    pub fn new(parts: Vec<u32>) -> Self {
        let partial_sums = parts
            .iter()
            .scan(0u32, |acc, &l| {
                *acc += l;
                Some(*acc)
            })
            .collect();
        Composition {
            parts,
            partial_sums,
        }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Number of parts `p`.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn total(&self) -> u32 {
        self.partial_sums.last().copied().unwrap_or(0)
    }

    /// `s_1, …, s_p` with `s_i = l_1 + … + l_i`.
    pub fn partial_sums(&self) -> &[u32] {
        &self.partial_sums
    }

    /// `s_i` for `i` in `0..=p`, with `s_0 = 0`.
    pub fn partial_sum(&self, i: usize) -> u32 {
        if i == 0 {
            0
        } else {
            self.partial_sums[i - 1]
        }
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, l) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{l}")?;
        }
        write!(f, ")")
    }
}

/// Lexicographically ordered iterator over the compositions of `total` into
/// `parts` parts.
#[derive(Clone, Debug)]
pub struct Compositions {
    current: Option<Vec<u32>>,
}

/// All weak compositions of `k` into `p` parts, in lexicographic order.
///
/// There are `C(k+p-1, p-1)` of them. For `p = 0` the single empty
/// composition is produced when `k = 0` and nothing otherwise.
pub fn compositions(k: u32, p: usize) -> Compositions {
    let current = match p {
        0 if k == 0 => Some(Vec::new()),
        0 => None,
        _ => {
            let mut first = vec![0; p];
            first[p - 1] = k;
            Some(first)
        }
    };
    Compositions { current }
}

impl Iterator for Compositions {
    type Item = Composition;

    fn next(&mut self) -> Option<Composition> {
        let current = self.current.take()?;
        let out = Composition::new(current.clone());
        let p = current.len();
        if p >= 2 {
            // rightmost slot (excluding the last) with mass to its right
            let mut suffix = current[p - 1];
            for i in (0..p - 1).rev() {
                if suffix > 0 {
                    let mut next = current.clone();
                    next[i] += 1;
                    for slot in next.iter_mut().skip(i + 1) {
                        *slot = 0;
                    }
                    next[p - 1] = suffix - 1;
                    self.current = Some(next);
                    break;
                }
                suffix += current[i];
            }
        }
        Some(out)
    }
}
