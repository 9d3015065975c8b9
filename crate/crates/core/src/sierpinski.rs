//! Vertices, adjacency and the edge stream of `S(G,t)`.
//!
//! A vertex is a word `x_1 x_2 ... x_t` over the base vertices. Two words
//! are adjacent when, at their first differing position `i`, the letters
//! form a base edge `{a, b}` and the remaining suffixes are `b b ... b` and
//! `a a ... a` respectively.
//!
//! Every word `x` is adjacent to `x_1 ... x_{t-1} y` for each base neighbor
//! `y` of its last letter, and to at most one more word: if `i` is the last
//! position before `t` whose letter differs from `x_t`, and `x_i` is a base
//! neighbor of `x_t`, then `x` is also adjacent to `x_1 ... x_{i-1} x_t x_i ... x_i`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use crate::base_graph::{big_pow, BaseGraph};
use crate::error::{Error, Result};

/// Default upper bound on `n^t` for explicit enumeration.
pub const DEFAULT_EXPLICIT_CAP: u64 = 1_000_000;

/// A vertex of `S(G,t)`. Letter 0 is the most significant.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(Vec<usize>);

impl Word {
    pub fn new(letters: Vec<usize>) -> Self {
        Self(letters)
    }

    /// The constant word `x x ... x`.
    pub fn constant(letter: usize, t: usize) -> Self {
        Self(vec![letter; t])
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn last(&self) -> Option<usize> {
        self.0.last().copied()
    }
}

impl From<Vec<usize>> for Word {
    fn from(letters: Vec<usize>) -> Self {
        Self(letters)
    }
}

/// 1-based labels joined by `.`, e.g. `1.3.3` for `[0, 2, 2]`.
impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, letter) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(".")?;
            }
            write!(f, "{}", letter + 1)?;
        }
        Ok(())
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.split('.')
            .map(|tok| match tok.trim().parse::<usize>() {
                Ok(label) if label >= 1 => Ok(label - 1),
                _ => Err(Error::MalformedInput {
                    line: 0,
                    message: format!("invalid word {s:?}"),
                }),
            })
            .collect::<Result<Vec<_>>>()
            .map(Word)
    }
}

/// The pair `(G, t)` and the enumeration limit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SierpinskiParams {
    base: BaseGraph,
    t: usize,
    explicit_cap: u64,
}

impl SierpinskiParams {
    pub fn new(base: BaseGraph, t: usize) -> Result<Self> {
        if t == 0 {
            return Err(Error::InvalidDimension);
        }
        Ok(Self {
            base,
            t,
            explicit_cap: DEFAULT_EXPLICIT_CAP,
        })
    }

    pub fn with_cap(mut self, explicit_cap: u64) -> Result<Self> {
        if explicit_cap == 0 {
            return Err(Error::InvalidCap);
        }
        self.explicit_cap = explicit_cap;
        Ok(self)
    }

    pub fn base(&self) -> &BaseGraph {
        &self.base
    }

    pub fn t(&self) -> usize {
        self.t
    }

    pub fn explicit_cap(&self) -> u64 {
        self.explicit_cap
    }

    /// `n^t`, exact.
    pub fn vertex_count(&self) -> BigUint {
        big_pow(self.base.order(), self.t)
    }

    /// `n^t` as a machine integer, or `CapExceeded` when it is above the cap.
    pub fn explicit_vertex_count(&self) -> Result<u64> {
        let n = self.base.order() as u64;
        let count = u32::try_from(self.t)
            .ok()
            .and_then(|t| n.checked_pow(t))
            .filter(|&c| c <= self.explicit_cap);
        count.ok_or_else(|| Error::CapExceeded {
            vertices: self.vertex_count(),
            cap: self.explicit_cap,
        })
    }

    pub fn check_word(&self, w: &Word) -> Result<()> {
        if w.len() != self.t {
            return Err(Error::LengthMismatch {
                expected: self.t,
                found: w.len(),
            });
        }
        let n = self.base.order();
        match w.letters().iter().find(|&&x| x >= n) {
            Some(&letter) => Err(Error::LetterOutOfRange { letter, n }),
            None => Ok(()),
        }
    }

    /// Base-`n` value of the word, first letter most significant.
    pub fn rank(&self, w: &Word) -> Result<BigUint> {
        self.check_word(w)?;
        let n = BigUint::from(self.base.order());
        Ok(w.letters()
            .iter()
            .fold(BigUint::zero(), |acc, &x| acc * &n + x))
    }

    pub fn unrank(&self, rank: &BigUint) -> Result<Word> {
        let vertex_count = self.vertex_count();
        if *rank >= vertex_count {
            return Err(Error::RankOutOfRange {
                rank: rank.clone(),
                vertex_count,
            });
        }
        let n = BigUint::from(self.base.order());
        let mut letters = vec![0; self.t];
        let mut rest = rank.clone();
        for slot in letters.iter_mut().rev() {
            let (q, r) = rest.div_rem(&n);
            *slot = r.to_usize().expect("digit below n");
            rest = q;
        }
        Ok(Word(letters))
    }

    /// Writes the word of `rank` into `letters`; `letters.len()` must be `t`.
    pub(crate) fn unrank_into(&self, mut rank: u64, letters: &mut [usize]) {
        let n = self.base.order() as u64;
        for slot in letters.iter_mut().rev() {
            *slot = (rank % n) as usize;
            rank /= n;
        }
    }

    pub fn is_edge(&self, u: &Word, v: &Word) -> Result<bool> {
        self.check_word(u)?;
        self.check_word(v)?;
        Ok(words_adjacent(&self.base, u.letters(), v.letters()))
    }

    /// Position of the letter that yields the extra neighbor, if any.
    fn extra_neighbor_position(&self, letters: &[usize]) -> Option<usize> {
        let (&last, head) = letters.split_last()?;
        let i = head.iter().rposition(|&x| x != last)?;
        self.base.has_edge(letters[i], last).then_some(i)
    }

    pub(crate) fn degree_of_letters(&self, letters: &[usize]) -> usize {
        let last = letters[letters.len() - 1];
        self.base.degree(last) + usize::from(self.extra_neighbor_position(letters).is_some())
    }

    /// Degree of `x` in `O(t)`, without building the neighborhood.
    pub fn degree_of(&self, x: &Word) -> Result<usize> {
        self.check_word(x)?;
        Ok(self.degree_of_letters(x.letters()))
    }

    /// Neighbors of `x`, sorted by rank.
    pub fn neighbors(&self, x: &Word) -> Result<Vec<Word>> {
        self.check_word(x)?;
        let letters = x.letters();
        let (&last, head) = letters.split_last().expect("t >= 1");
        let mut out: Vec<Word> = self
            .base
            .neighbors(last)
            .iter()
            .map(|&y| {
                let mut w = head.to_vec();
                w.push(y);
                Word(w)
            })
            .collect();
        if let Some(i) = self.extra_neighbor_position(letters) {
            let mut w = letters[..i].to_vec();
            w.push(last);
            w.resize(self.t, letters[i]);
            out.push(Word(w));
        }
        out.sort_unstable();
        Ok(out)
    }

    /// Streams every edge of `S(G,t)` once, as rank pairs `(u, v)` with `u < v`.
    pub fn edge_ranks(&self) -> Result<EdgeRanks> {
        let vertex_count = self.explicit_vertex_count()?;
        let n = self.base.order() as u64;
        let powers: Vec<u64> = std::iter::successors(Some(1u64), |p| p.checked_mul(n))
            .take(self.t + 1)
            .collect();
        // repunits[s] = 1 + n + ... + n^(s-1)
        let repunits: Vec<u64> = std::iter::once(0)
            .chain(powers.iter().scan(0u64, |acc, p| {
                *acc += p;
                Some(*acc)
            }))
            .take(self.t + 1)
            .collect();
        debug_assert_eq!(powers[self.t], vertex_count);
        let base_edges: Vec<(u64, u64)> = self
            .base
            .edges()
            .map(|(a, b)| (a as u64, b as u64))
            .collect();
        let remaining = repunits[self.t] * base_edges.len() as u64;
        Ok(EdgeRanks {
            powers,
            repunits,
            base_edges,
            t: self.t,
            level: 1,
            prefix: 0,
            edge: 0,
            remaining,
        })
    }

    /// Streams every edge of `S(G,t)` once as a pair of words.
    ///
    /// Order: level `i` ascending, then prefix rank, then base edge `{a, b}`
    /// with `a < b`; each pair is `(w a b...b, w b a...a)`, lower rank first.
    pub fn edges(&self) -> Result<Edges<'_>> {
        Ok(Edges {
            params: self,
            ranks: self.edge_ranks()?,
        })
    }
}

/// Definition-level adjacency test on two words of equal length.
pub(crate) fn words_adjacent(base: &BaseGraph, u: &[usize], v: &[usize]) -> bool {
    let Some(i) = u.iter().zip(v).position(|(a, b)| a != b) else {
        return false;
    };
    let (a, b) = (u[i], v[i]);
    base.has_edge(a, b) && u[i + 1..].iter().all(|&x| x == b) && v[i + 1..].iter().all(|&x| x == a)
}

/// Pull-based edge stream over ranks. Holds `O(t + m)` state.
#[derive(Debug, Clone)]
pub struct EdgeRanks {
    powers: Vec<u64>,
    repunits: Vec<u64>,
    base_edges: Vec<(u64, u64)>,
    t: usize,
    level: usize,
    prefix: u64,
    edge: usize,
    remaining: u64,
}

impl Iterator for EdgeRanks {
    type Item = (u64, u64);

    fn next(&mut self) -> Option<(u64, u64)> {
        if self.base_edges.is_empty() {
            return None;
        }
        loop {
            if self.level > self.t {
                return None;
            }
            if self.prefix == self.powers[self.level - 1] {
                self.level += 1;
                self.prefix = 0;
                continue;
            }
            if self.edge == self.base_edges.len() {
                self.prefix += 1;
                self.edge = 0;
                continue;
            }
            let suffix = self.t - self.level;
            let (a, b) = self.base_edges[self.edge];
            let head = self.prefix * self.powers[suffix + 1];
            let place = self.powers[suffix];
            let fill = self.repunits[suffix];
            self.edge += 1;
            self.remaining -= 1;
            return Some((head + a * place + b * fill, head + b * place + a * fill));
        }
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = usize::try_from(self.remaining).ok();
        (left.unwrap_or(usize::MAX), left)
    }
}

impl ExactSizeIterator for EdgeRanks {}

/// [`EdgeRanks`] decoded into words.
#[derive(Debug, Clone)]
pub struct Edges<'a> {
    params: &'a SierpinskiParams,
    ranks: EdgeRanks,
}

impl Iterator for Edges<'_> {
    type Item = (Word, Word);

    fn next(&mut self) -> Option<(Word, Word)> {
        let (u, v) = self.ranks.next()?;
        let t = self.params.t;
        let mut wu = vec![0; t];
        let mut wv = vec![0; t];
        self.params.unrank_into(u, &mut wu);
        self.params.unrank_into(v, &mut wv);
        Some((Word(wu), Word(wv)))
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        self.ranks.size_hint()
    }
}
