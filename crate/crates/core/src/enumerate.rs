//! Generation of all valid configurations.
//!
//! [`enumerate`] follows the three-branch string construction: a string on
//! `n` elements is either a bare element followed by a string on `n - 1`,
//! or `(s S s) S'` / `[s S s] S'` with an inner string on `2a` and a tail on
//! `b` elements, `2a + b + 2 = n`. It is lazy and keeps only the current
//! derivation tree.
//!
//! [`brute_force`] is an independent oracle. It walks the `n + 1` gaps
//! between elements, placing at most one closing and then at most one
//! opening bracket in each, and prunes with the validity rules directly.

use std::collections::BTreeMap;

use crate::error::{domain, Result};
use crate::model::{index_count, Pair, PairKind, PairingConfig};

/// Derivation tree of one string.
#[derive(Debug, Clone, PartialEq, Eq)]
enum Shape {
    Empty,
    Bare(Box<Shape>),
    Led {
        kind: PairKind,
        half_inner: usize,
        inner: Box<Shape>,
        rest: Box<Shape>,
    },
}

impl Shape {
    fn first(n: usize) -> Shape {
        if n == 0 {
            Shape::Empty
        } else {
            Shape::Bare(Box::new(Shape::first(n - 1)))
        }
    }

    fn led(kind: PairKind, half_inner: usize, n: usize) -> Shape {
        Shape::Led {
            kind,
            half_inner,
            inner: Box::new(Shape::first(2 * half_inner)),
            rest: Box::new(Shape::first(n - 2 - 2 * half_inner)),
        }
    }

    /// Successor of `self` among strings on `n` elements.
    fn next(&self, n: usize) -> Option<Shape> {
        match self {
            Shape::Empty => None,
            Shape::Bare(rest) => match rest.next(n - 1) {
                Some(r) => Some(Shape::Bare(Box::new(r))),
                None if n >= 2 => Some(Shape::led(PairKind::Round, 0, n)),
                None => None,
            },
            Shape::Led {
                kind,
                half_inner,
                inner,
                rest,
            } => {
                let a = *half_inner;
                let b = n - 2 - 2 * a;
                if let Some(r) = rest.next(b) {
                    return Some(Shape::Led {
                        kind: *kind,
                        half_inner: a,
                        inner: inner.clone(),
                        rest: Box::new(r),
                    });
                }
                if let Some(i) = inner.next(2 * a) {
                    return Some(Shape::Led {
                        kind: *kind,
                        half_inner: a,
                        inner: Box::new(i),
                        rest: Box::new(Shape::first(b)),
                    });
                }
                if 2 * (a + 1) + 2 <= n {
                    return Some(Shape::led(*kind, a + 1, n));
                }
                match kind {
                    PairKind::Round => Some(Shape::led(PairKind::Square, 0, n)),
                    PairKind::Square => None,
                }
            }
        }
    }

    fn collect_pairs(&self, offset: usize, out: &mut Vec<Pair>) {
        match self {
            Shape::Empty => {}
            Shape::Bare(rest) => rest.collect_pairs(offset + 1, out),
            Shape::Led {
                kind,
                half_inner,
                inner,
                rest,
            } => {
                let inner_len = 2 * half_inner;
                out.push(Pair::new(offset, offset + inner_len + 1, *kind));
                inner.collect_pairs(offset + 1, out);
                rest.collect_pairs(offset + inner_len + 2, out);
            }
        }
    }
}

/// Lazy stream of every valid configuration of one degree.
#[derive(Debug, Clone)]
pub struct Enumeration {
    degree: usize,
    current: Option<Shape>,
}

impl Iterator for Enumeration {
    type Item = PairingConfig;

    fn next(&mut self) -> Option<PairingConfig> {
        let n = index_count(self.degree);
        let shape = self.current.take()?;
        let mut pairs = Vec::new();
        shape.collect_pairs(0, &mut pairs);
        pairs.sort();
        self.current = shape.next(n);
        Some(PairingConfig::from_sorted_unchecked(self.degree, pairs))
    }
}

/// All valid configurations of degree `d`, in generation order.
pub fn enumerate(degree: usize) -> Result<Enumeration> {
    if degree == 0 {
        return Err(domain("degree must be at least 1"));
    }
    Ok(Enumeration {
        degree,
        current: Some(Shape::first(index_count(degree))),
    })
}

/// All configurations of degree `d` sorted by their rendered text.
pub fn enumerate_sorted(degree: usize) -> Result<Vec<PairingConfig>> {
    let mut all: Vec<(String, PairingConfig)> = enumerate(degree)?
        .map(|c| (crate::bracket::render(&c), c))
        .collect();
    all.sort();
    Ok(all.into_iter().map(|(_, c)| c).collect())
}

/// One bracket string found by the exhaustive search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FoundString {
    /// Text with single-character elements `s`.
    pub text: String,
    pub round: usize,
    pub square: usize,
}

struct Search<'a, F: FnMut(&FoundString)> {
    n: usize,
    text: String,
    // open brackets: kind and index of the first enclosed element
    stack: Vec<(PairKind, usize)>,
    round: usize,
    square: usize,
    visit: &'a mut F,
}

impl<F: FnMut(&FoundString)> Search<'_, F> {
    /// Chooses the bracket tokens of gap `g`, which precedes element `g`.
    fn gap(&mut self, g: usize) {
        let closes: &[Option<PairKind>] = if g == 0 {
            &[None]
        } else {
            &[None, Some(PairKind::Round), Some(PairKind::Square)]
        };
        for &close in closes {
            let mut popped = None;
            if let Some(kind) = close {
                match self.stack.last() {
                    Some(&(k, start)) if k == kind && (g - start).is_multiple_of(2) => {
                        popped = self.stack.pop();
                    }
                    _ => continue,
                }
                self.text
                    .push(if kind == PairKind::Round { ')' } else { ']' });
            }
            let opens: &[Option<PairKind>] = if g == self.n {
                &[None]
            } else {
                &[None, Some(PairKind::Round), Some(PairKind::Square)]
            };
            for &open in opens {
                if g == self.n {
                    if self.stack.is_empty() {
                        (self.visit)(&FoundString {
                            text: self.text.clone(),
                            round: self.round,
                            square: self.square,
                        });
                    }
                    continue;
                }
                if let Some(kind) = open {
                    self.stack.push((kind, g));
                    self.text
                        .push(if kind == PairKind::Round { '(' } else { '[' });
                    match kind {
                        PairKind::Round => self.round += 1,
                        PairKind::Square => self.square += 1,
                    }
                }
                // an open bracket must close before the elements run out
                let remaining = self.n - g;
                if self.stack.len() <= remaining {
                    self.text.push('s');
                    self.gap(g + 1);
                    self.text.pop();
                }
                if let Some(kind) = open {
                    self.stack.pop();
                    self.text.pop();
                    match kind {
                        PairKind::Round => self.round -= 1,
                        PairKind::Square => self.square -= 1,
                    }
                }
            }
            if let Some(p) = popped {
                self.stack.push(p);
                self.text.pop();
            }
        }
    }
}

/// Visits every valid bracket string on `n` elements (any `n`, odd
/// included) by exhaustive search over bracket placements.
pub fn brute_force(n: usize, mut visit: impl FnMut(&FoundString)) {
    let mut search = Search {
        n,
        text: String::new(),
        stack: Vec::new(),
        round: 0,
        square: 0,
        visit: &mut visit,
    };
    search.gap(0);
}

/// Number of valid bracket strings on `n` elements, by exhaustive search.
pub fn brute_count(n: i64) -> Result<u64> {
    let n = usize::try_from(n).map_err(|_| domain("element count must be nonnegative"))?;
    let mut count = 0u64;
    brute_force(n, |_| count += 1);
    Ok(count)
}

/// Exhaustive-search histogram keyed by `(s, h)`.
pub fn brute_force_histogram(n: usize) -> BTreeMap<(usize, usize), u64> {
    let mut hist = BTreeMap::new();
    brute_force(n, |f| *hist.entry((f.square, f.round)).or_insert(0) += 1);
    hist
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bracket::{parse, render_placeholders};

    #[test]
    fn degree_two_in_generation_order() {
        let all: Vec<String> = enumerate(2)
            .unwrap()
            .map(|c| render_placeholders(&c))
            .collect();
        assert_eq!(all, ["ss", "(ss)", "[ss]"]);
    }

    #[test]
    fn degree_three_matches_the_construction_table() {
        let all: Vec<String> = enumerate(3)
            .unwrap()
            .map(|c| render_placeholders(&c))
            .collect();
        let table = [
            "ssss", "ss(ss)", "ss[ss]", "s(ss)s", "s[ss]s", "(ss)ss", "(ss)(ss)", "(ss)[ss]",
            "(ssss)", "(s(ss)s)", "(s[ss]s)", "[ss]ss", "[ss](ss)", "[ss][ss]", "[ssss]",
            "[s(ss)s]", "[s[ss]s]",
        ];
        assert_eq!(all, table);
    }

    #[test]
    fn degree_one_yields_the_empty_config() {
        let all: Vec<PairingConfig> = enumerate(1).unwrap().collect();
        assert_eq!(all.len(), 1);
        assert!(all[0].is_empty());
        assert!(enumerate(0).is_err());
    }

    #[test]
    fn brute_count_examples() {
        assert_eq!(brute_count(0).unwrap(), 1);
        assert_eq!(brute_count(3).unwrap(), 5);
        assert_eq!(brute_count(4).unwrap(), 17);
        assert_eq!(brute_count(5).unwrap(), 33);
        assert!(brute_count(-1).is_err());
    }

    #[test]
    fn brute_force_strings_all_parse() {
        brute_force(6, |f| {
            let c = parse(&f.text).unwrap();
            let inv = c.invariants();
            assert_eq!((inv.h, inv.s), (f.round, f.square));
        });
    }

    #[test]
    fn sorted_enumeration_is_a_permutation() {
        let mut a: Vec<PairingConfig> = enumerate(4).unwrap().collect();
        let b = enumerate_sorted(4).unwrap();
        assert_eq!(b.len(), 119);
        a.sort();
        let mut b2 = b.clone();
        b2.sort();
        assert_eq!(a, b2);
    }
}
