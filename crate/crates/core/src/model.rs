//! The two equivalent encodings of a combinatorial class and the typed pairing
//! configuration they both reduce to.
//!
//! All three live on the index set `{0, .., 2d-3}` laid out around the unit
//! circle. A single index string serves double duty: members of the
//! homoclinic set `H` name separatrices, every other index names an end.
//!
//! * [`SeparatrixData`] is a non-crossing partition plus the marked set `H`.
//!   Blocks inside `H` are homoclinic pairs; the rest group landing
//!   separatrices by the equilibrium point they land on.
//! * [`TransversalData`] is a non-crossing parity-swapping involution whose
//!   non-fixed orbits are split between `H` and the transversal set `T`.
//! * [`PairingConfig`] is the transversal data read as typed pairs, the form
//!   produced by the bracket language.

use std::collections::BTreeSet;
use std::fmt;

use crate::cells;
use crate::error::{Error, Result};

/// Number of indices on the circle for degree `d`.
pub fn index_count(degree: usize) -> usize {
    2 * degree.saturating_sub(1)
}

fn check_degree(degree: usize) -> Result<()> {
    if degree == 0 {
        Err(crate::error::domain("degree must be at least 1"))
    } else {
        Ok(())
    }
}

/// Bracket type of a pair: round pairs are homoclinic separatrices, square
/// pairs are distinguished transversals.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PairKind {
    Round,
    Square,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Pair {
    pub low: usize,
    pub high: usize,
    pub kind: PairKind,
}

impl Pair {
    pub fn new(a: usize, b: usize, kind: PairKind) -> Self {
        Pair {
            low: a.min(b),
            high: a.max(b),
            kind,
        }
    }
}

/// `(h, s, q)`: homoclinic count, transversal count and real dimension `h + 2s`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Invariants {
    pub h: usize,
    pub s: usize,
    pub q: usize,
}

/// A typed non-crossing pairing of the indices `0..2d-2`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PairingConfig {
    degree: usize,
    pairs: Vec<Pair>,
    unpaired: Vec<usize>,
}

impl PairingConfig {
    /// Builds a configuration, checking that the pairs are in range, disjoint,
    /// opposite-parity and mutually non-crossing. Indices not mentioned are
    /// unpaired.
    pub fn new(degree: usize, pairs: impl IntoIterator<Item = Pair>) -> Result<Self> {
        check_degree(degree)?;
        let n = index_count(degree);
        let mut pairs: Vec<Pair> = pairs
            .into_iter()
            .map(|p| Pair::new(p.low, p.high, p.kind))
            .collect();
        pairs.sort();
        let mut seen = vec![false; n];
        for p in &pairs {
            for i in [p.low, p.high] {
                if i >= n {
                    return Err(Error::Invalid(format!(
                        "index {i} out of range for degree {degree}"
                    )));
                }
                if std::mem::replace(&mut seen[i], true) {
                    return Err(Error::Invalid(format!("index {i} paired twice")));
                }
            }
            if (p.high - p.low) % 2 == 0 {
                return Err(Error::Invalid(format!(
                    "pair {}-{} joins indices of equal parity",
                    p.low, p.high
                )));
            }
        }
        for (i, a) in pairs.iter().enumerate() {
            for b in &pairs[i + 1..] {
                if intervals_cross((a.low, a.high), (b.low, b.high)) {
                    return Err(Error::Invalid(format!(
                        "pairs {}-{} and {}-{} cross",
                        a.low, a.high, b.low, b.high
                    )));
                }
            }
        }
        let unpaired = (0..n).filter(|&i| !seen[i]).collect();
        Ok(PairingConfig {
            degree,
            pairs,
            unpaired,
        })
    }

    /// Construction from pairs already known to be well formed and sorted.
    pub(crate) fn from_sorted_unchecked(degree: usize, pairs: Vec<Pair>) -> Self {
        let n = index_count(degree);
        let mut seen = vec![false; n];
        for p in &pairs {
            seen[p.low] = true;
            seen[p.high] = true;
        }
        let unpaired = (0..n).filter(|&i| !seen[i]).collect();
        PairingConfig {
            degree,
            pairs,
            unpaired,
        }
    }

    /// The configuration with every index unpaired.
    pub fn all_unpaired(degree: usize) -> Result<Self> {
        Self::new(degree, [])
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn len(&self) -> usize {
        index_count(self.degree)
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Pairs sorted by their low index.
    pub fn pairs(&self) -> &[Pair] {
        &self.pairs
    }

    pub fn unpaired(&self) -> &[usize] {
        &self.unpaired
    }

    pub fn invariants(&self) -> Invariants {
        let h = self
            .pairs
            .iter()
            .filter(|p| p.kind == PairKind::Round)
            .count();
        let s = self.pairs.len() - h;
        Invariants { h, s, q: h + 2 * s }
    }

    /// Reads round pairs as `H`, square pairs as `T` and unpaired indices as
    /// fixed points.
    pub fn to_transversal(&self) -> TransversalData {
        let n = self.len();
        let mut involution: Vec<usize> = (0..n).collect();
        let mut homoclinic = BTreeSet::new();
        let mut transversal = BTreeSet::new();
        for p in &self.pairs {
            involution[p.low] = p.high;
            involution[p.high] = p.low;
            let set = match p.kind {
                PairKind::Round => &mut homoclinic,
                PairKind::Square => &mut transversal,
            };
            set.insert(p.low);
            set.insert(p.high);
        }
        TransversalData {
            degree: self.degree,
            involution,
            homoclinic,
            transversal,
        }
    }

    /// Inverse of [`PairingConfig::to_transversal`]; the data must validate.
    pub fn from_transversal(data: &TransversalData) -> Result<Self> {
        let report = validate_transversal(data);
        if !report.is_pass() {
            return Err(Error::Invalid(report.to_string()));
        }
        let pairs = data
            .involution
            .iter()
            .enumerate()
            .filter(|&(i, &j)| i < j)
            .map(|(i, &j)| {
                let kind = if data.homoclinic.contains(&i) {
                    PairKind::Round
                } else {
                    PairKind::Square
                };
                Pair::new(i, j, kind)
            })
            .collect();
        Ok(Self::from_sorted_unchecked(data.degree, pairs))
    }

    /// Pair containing `index`, if any.
    pub fn pair_of(&self, index: usize) -> Option<&Pair> {
        self.pairs
            .iter()
            .find(|p| p.low == index || p.high == index)
    }
}

/// Homoclinic count, transversal count and dimension of a configuration.
pub fn invariants_of(config: &PairingConfig) -> Invariants {
    config.invariants()
}

/// Whether two chords, given as index pairs, interleave.
pub fn intervals_cross(a: (usize, usize), b: (usize, usize)) -> bool {
    let (a0, a1) = (a.0.min(a.1), a.0.max(a.1));
    let (b0, b1) = (b.0.min(b.1), b.0.max(b.1));
    (a0 < b0 && b0 < a1 && a1 < b1) || (b0 < a0 && a0 < b1 && b1 < a1)
}

/// Equivalence relation `~` (as a partition) with homoclinic set `H`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SeparatrixData {
    degree: usize,
    classes: Vec<Vec<usize>>,
    homoclinic: BTreeSet<usize>,
}

impl SeparatrixData {
    /// Stores the classes in canonical order (sorted blocks, blocks sorted by
    /// least element). No validation happens here; see [`validate_separatrix`].
    pub fn new(
        degree: usize,
        classes: impl IntoIterator<Item = Vec<usize>>,
        homoclinic: impl IntoIterator<Item = usize>,
    ) -> Self {
        let mut classes: Vec<Vec<usize>> = classes
            .into_iter()
            .map(|mut b| {
                b.sort_unstable();
                b
            })
            .collect();
        classes.sort();
        SeparatrixData {
            degree,
            classes,
            homoclinic: homoclinic.into_iter().collect(),
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn homoclinic(&self) -> &BTreeSet<usize> {
        &self.homoclinic
    }

    /// Index of the block containing each index. Requires a valid partition.
    pub(crate) fn block_of(&self) -> Vec<usize> {
        let mut out = vec![usize::MAX; index_count(self.degree)];
        for (b, block) in self.classes.iter().enumerate() {
            for &i in block {
                out[i] = b;
            }
        }
        out
    }
}

/// Involution `ι` with homoclinic set `H` and transversal set `T`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TransversalData {
    degree: usize,
    involution: Vec<usize>,
    homoclinic: BTreeSet<usize>,
    transversal: BTreeSet<usize>,
}

impl TransversalData {
    /// Unvalidated constructor; see [`validate_transversal`].
    pub fn new(
        degree: usize,
        involution: Vec<usize>,
        homoclinic: impl IntoIterator<Item = usize>,
        transversal: impl IntoIterator<Item = usize>,
    ) -> Self {
        TransversalData {
            degree,
            involution,
            homoclinic: homoclinic.into_iter().collect(),
            transversal: transversal.into_iter().collect(),
        }
    }

    /// Builds the involution from homoclinic and transversal pairs; other
    /// indices are fixed. Out-of-range indices are a domain error.
    pub fn from_pairs(
        degree: usize,
        homoclinic_pairs: &[(usize, usize)],
        transversal_pairs: &[(usize, usize)],
    ) -> Result<Self> {
        check_degree(degree)?;
        let n = index_count(degree);
        let mut involution: Vec<usize> = (0..n).collect();
        let mut h = BTreeSet::new();
        let mut t = BTreeSet::new();
        for (pairs, set) in [(homoclinic_pairs, &mut h), (transversal_pairs, &mut t)] {
            for &(a, b) in pairs {
                if a >= n || b >= n {
                    return Err(crate::error::domain(format!(
                        "pair {a}-{b} out of range for degree {degree}"
                    )));
                }
                involution[a] = b;
                involution[b] = a;
                set.insert(a);
                set.insert(b);
            }
        }
        Ok(Self::new(degree, involution, h, t))
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn involution(&self) -> &[usize] {
        &self.involution
    }

    pub fn homoclinic(&self) -> &BTreeSet<usize> {
        &self.homoclinic
    }

    pub fn transversal(&self) -> &BTreeSet<usize> {
        &self.transversal
    }

    /// Non-fixed orbits `{l, ι(l)}` with `l < ι(l)`.
    pub fn chords(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.involution
            .iter()
            .enumerate()
            .filter(|&(i, &j)| i < j)
            .map(|(i, &j)| (i, j))
    }
}

/// A single broken constraint, naming the offending indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    OutOfRange {
        index: usize,
    },
    /// An index occurs `count` times across the blocks instead of once.
    Coverage {
        index: usize,
        count: usize,
    },
    EmptyBlock,
    /// Two indices joined by a homoclinic pair or involution orbit share parity.
    Parity {
        a: usize,
        b: usize,
    },
    /// A block touching `H` that is not an opposite-parity pair inside `H`.
    HomoclinicBlock {
        block: Vec<usize>,
    },
    /// Witness `a1 < b1 < a2 < b2` of two interleaving blocks or chords.
    Crossing {
        first: (usize, usize),
        second: (usize, usize),
    },
    NotInvolution {
        index: usize,
    },
    /// Inconsistent `H`/`T` marking at an index.
    Marking {
        index: usize,
        reason: &'static str,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::OutOfRange { index } => write!(f, "index {index} out of range"),
            Violation::Coverage { index, count } => {
                write!(f, "index {index} appears {count} times in the partition")
            }
            Violation::EmptyBlock => write!(f, "empty block"),
            Violation::Parity { a, b } => write!(f, "{a} and {b} have the same parity"),
            Violation::HomoclinicBlock { block } => {
                write!(f, "block {block:?} is not an opposite-parity pair inside H")
            }
            Violation::Crossing { first, second } => write!(
                f,
                "chords {}-{} and {}-{} cross",
                first.0, first.1, second.0, second.1
            ),
            Violation::NotInvolution { index } => {
                write!(f, "map is not an involution at {index}")
            }
            Violation::Marking { index, reason } => write!(f, "index {index}: {reason}"),
        }
    }
}

/// Every violation found, in detection order. Empty means pass.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_pass(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_pass() {
            return write!(f, "pass");
        }
        for (i, v) in self.violations.iter().enumerate() {
            if i > 0 {
                write!(f, "; ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// Witness of two index sets interleaving on the circle, if they do.
///
/// Collapsing the merged sequence into runs of equal membership, the sets
/// are non-crossing iff at most three runs remain.
fn crossing_witness(a: &[usize], b: &[usize]) -> Option<((usize, usize), (usize, usize))> {
    let mut merged: Vec<(usize, bool)> = a
        .iter()
        .map(|&x| (x, true))
        .chain(b.iter().map(|&x| (x, false)))
        .collect();
    merged.sort_unstable();
    let mut runs: Vec<(usize, bool)> = Vec::new();
    for (x, side) in merged {
        if runs.last().map(|r| r.1) != Some(side) {
            runs.push((x, side));
        }
    }
    if runs.len() < 4 {
        return None;
    }
    Some(((runs[0].0, runs[2].0), (runs[1].0, runs[3].0)))
}

pub fn validate_separatrix(data: &SeparatrixData) -> ValidationReport {
    let mut violations = Vec::new();
    let n = index_count(data.degree);
    let mut count = vec![0usize; n];
    for block in &data.classes {
        if block.is_empty() {
            violations.push(Violation::EmptyBlock);
        }
        for &i in block {
            match count.get_mut(i) {
                Some(c) => *c += 1,
                None => violations.push(Violation::OutOfRange { index: i }),
            }
        }
    }
    for &i in &data.homoclinic {
        if i >= n {
            violations.push(Violation::OutOfRange { index: i });
        }
    }
    for (index, &c) in count.iter().enumerate() {
        if c != 1 {
            violations.push(Violation::Coverage { index, count: c });
        }
    }
    for block in &data.classes {
        let inside = block.iter().filter(|i| data.homoclinic.contains(i)).count();
        if inside == 0 {
            continue;
        }
        if inside != block.len() || block.len() != 2 {
            violations.push(Violation::HomoclinicBlock {
                block: block.clone(),
            });
        } else if (block[0] + block[1]) % 2 == 0 {
            violations.push(Violation::Parity {
                a: block[0],
                b: block[1],
            });
        }
    }
    for (i, a) in data.classes.iter().enumerate() {
        for b in &data.classes[i + 1..] {
            if let Some((first, second)) = crossing_witness(a, b) {
                violations.push(Violation::Crossing { first, second });
            }
        }
    }
    ValidationReport { violations }
}

pub fn validate_transversal(data: &TransversalData) -> ValidationReport {
    let mut violations = Vec::new();
    let n = index_count(data.degree);
    let iota = &data.involution;
    if iota.len() != n {
        for index in iota.len().min(n)..iota.len().max(n) {
            violations.push(Violation::OutOfRange { index });
        }
        return ValidationReport { violations };
    }
    for (i, &j) in iota.iter().enumerate() {
        if j >= n {
            violations.push(Violation::OutOfRange { index: j });
        } else if iota[j] != i {
            violations.push(Violation::NotInvolution { index: i });
        }
    }
    if !violations.is_empty() {
        return ValidationReport { violations };
    }
    for &i in data.homoclinic.iter().chain(&data.transversal) {
        if i >= n {
            violations.push(Violation::OutOfRange { index: i });
        }
    }
    for &i in data.homoclinic.intersection(&data.transversal) {
        violations.push(Violation::Marking {
            index: i,
            reason: "marked both homoclinic and transversal",
        });
    }
    for (i, &j) in iota.iter().enumerate() {
        let marked = data.homoclinic.contains(&i) || data.transversal.contains(&i);
        if i == j {
            if marked {
                violations.push(Violation::Marking {
                    index: i,
                    reason: "fixed point carries a marking",
                });
            }
            continue;
        }
        if !marked {
            violations.push(Violation::Marking {
                index: i,
                reason: "paired index is unmarked",
            });
        }
        if i < j {
            if (i + j) % 2 == 0 {
                violations.push(Violation::Parity { a: i, b: j });
            }
            let split = data.homoclinic.contains(&i) != data.homoclinic.contains(&j)
                || data.transversal.contains(&i) != data.transversal.contains(&j);
            if split {
                violations.push(Violation::Marking {
                    index: i,
                    reason: "pair split across H and T",
                });
            }
        }
    }
    let chords: Vec<(usize, usize)> = data.chords().collect();
    for (k, &a) in chords.iter().enumerate() {
        for &b in &chords[k + 1..] {
            if intervals_cross(a, b) {
                let (first, second) = if a.0 < b.0 { (a, b) } else { (b, a) };
                violations.push(Violation::Crossing { first, second });
            }
        }
    }
    ValidationReport { violations }
}

/// Keeps the homoclinic pairs and, in every αω cell, joins the one odd and
/// one even end not indexed by a homoclinic separatrix. Sepal ends become
/// fixed points.
pub fn to_transversal(data: &SeparatrixData) -> Result<TransversalData> {
    let report = validate_separatrix(data);
    if !report.is_pass() {
        return Err(Error::Invalid(report.to_string()));
    }
    let n = index_count(data.degree);
    let mut involution: Vec<usize> = (0..n).collect();
    let mut transversal = BTreeSet::new();
    for block in data
        .classes
        .iter()
        .filter(|b| data.homoclinic.contains(&b[0]))
    {
        involution[block[0]] = block[1];
        involution[block[1]] = block[0];
    }
    for cell in cells::separatrix_cells(data)? {
        if let cells::CellKind::AlphaOmega = cell.kind {
            let (a, b) = (cell.free_ends[0], cell.free_ends[1]);
            involution[a] = b;
            involution[b] = a;
            transversal.insert(a);
            transversal.insert(b);
        }
    }
    Ok(TransversalData {
        degree: data.degree,
        involution,
        homoclinic: data.homoclinic.clone(),
        transversal,
    })
}

/// Keeps the homoclinic pairs and joins every landing index on the boundary
/// of one transversal cell into a single class.
pub fn to_separatrix(data: &TransversalData) -> Result<SeparatrixData> {
    let report = validate_transversal(data);
    if !report.is_pass() {
        return Err(Error::Invalid(report.to_string()));
    }
    let mut classes: Vec<Vec<usize>> = data
        .chords()
        .filter(|(i, _)| data.homoclinic.contains(i))
        .map(|(i, j)| vec![i, j])
        .collect();
    classes.extend(
        cells::transversal_cells(data)
            .into_iter()
            .map(|c| c.landing)
            .filter(|l| !l.is_empty()),
    );
    Ok(SeparatrixData::new(
        data.degree,
        classes,
        data.homoclinic.iter().copied(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sep(d: usize, classes: &[&[usize]], h: &[usize]) -> SeparatrixData {
        SeparatrixData::new(d, classes.iter().map(|c| c.to_vec()), h.iter().copied())
    }

    fn figure_pair() -> TransversalData {
        TransversalData::from_pairs(5, &[(0, 3), (6, 7)], &[(4, 5)]).unwrap()
    }

    #[test]
    fn separatrix_validation_examples() {
        assert!(validate_separatrix(&sep(2, &[&[0], &[1]], &[])).is_pass());

        let r = validate_separatrix(&sep(3, &[&[0, 2], &[1], &[3]], &[0, 2]));
        assert_eq!(r.violations, vec![Violation::Parity { a: 0, b: 2 }]);

        let r = validate_separatrix(&sep(4, &[&[0, 3], &[2, 5], &[1], &[4]], &[0, 3, 2, 5]));
        assert_eq!(
            r.violations,
            vec![Violation::Crossing {
                first: (0, 3),
                second: (2, 5)
            }]
        );
    }

    #[test]
    fn separatrix_validation_reports_everything() {
        // index 4 missing, 5 out of range, a mixed H block
        let r = validate_separatrix(&sep(3, &[&[0, 1, 5], &[2], &[3]], &[0]));
        assert!(r.violations.contains(&Violation::OutOfRange { index: 5 }));
        assert!(r
            .violations
            .iter()
            .any(|v| matches!(v, Violation::HomoclinicBlock { .. })));
        assert!(!r.is_pass());
    }

    #[test]
    fn transversal_validation_examples() {
        assert!(validate_transversal(&figure_pair()).is_pass());

        let split = TransversalData::new(2, vec![1, 0], [0], [1]);
        let r = validate_transversal(&split);
        assert!(r
            .violations
            .iter()
            .any(|v| matches!(v, Violation::Marking { reason, .. } if reason.contains("split"))));

        let crossing = TransversalData::from_pairs(4, &[], &[(0, 3), (2, 5)]).unwrap();
        assert_eq!(
            validate_transversal(&crossing).violations,
            vec![Violation::Crossing {
                first: (0, 3),
                second: (2, 5)
            }]
        );
    }

    #[test]
    fn transversal_validation_rejects_non_involution() {
        let bad = TransversalData::new(2, vec![1, 1], [], [0, 1]);
        assert!(validate_transversal(&bad)
            .violations
            .contains(&Violation::NotInvolution { index: 0 }));
    }

    #[test]
    fn conversion_examples() {
        let s = to_separatrix(&figure_pair()).unwrap();
        assert_eq!(
            s,
            sep(5, &[&[0, 3], &[6, 7], &[1, 2], &[4], &[5]], &[0, 3, 6, 7])
        );
        assert_eq!(to_transversal(&s).unwrap(), figure_pair());

        // two landing points split by one transversal
        let t = to_transversal(&sep(2, &[&[0], &[1]], &[])).unwrap();
        assert_eq!(t, TransversalData::from_pairs(2, &[], &[(0, 1)]).unwrap());

        let identity = TransversalData::from_pairs(2, &[], &[]).unwrap();
        assert_eq!(to_separatrix(&identity).unwrap(), sep(2, &[&[0, 1]], &[]));
        assert_eq!(to_transversal(&sep(2, &[&[0, 1]], &[])).unwrap(), identity);

        let hom = TransversalData::from_pairs(2, &[(0, 1)], &[]).unwrap();
        assert_eq!(to_separatrix(&hom).unwrap(), sep(2, &[&[0, 1]], &[0, 1]));
        assert_eq!(to_transversal(&sep(2, &[&[0, 1]], &[0, 1])).unwrap(), hom);
    }

    #[test]
    fn degree_one_is_empty() {
        let t = TransversalData::from_pairs(1, &[], &[]).unwrap();
        assert!(validate_transversal(&t).is_pass());
        let s = to_separatrix(&t).unwrap();
        assert!(s.classes().is_empty());
        assert_eq!(to_transversal(&s).unwrap(), t);
    }

    #[test]
    fn invariants_examples() {
        let c = PairingConfig::from_transversal(&figure_pair()).unwrap();
        assert_eq!(c.unpaired(), &[1, 2]);
        assert_eq!(invariants_of(&c), Invariants { h: 2, s: 1, q: 4 });

        let all = PairingConfig::all_unpaired(6).unwrap();
        assert_eq!(invariants_of(&all), Invariants { h: 0, s: 0, q: 0 });

        let stable = PairingConfig::new(
            4,
            [(0, 1), (2, 3), (4, 5)].map(|(a, b)| Pair::new(a, b, PairKind::Square)),
        )
        .unwrap();
        assert_eq!(invariants_of(&stable), Invariants { h: 0, s: 3, q: 6 });
    }

    #[test]
    fn pairing_config_rejects_malformed_pairs() {
        assert!(PairingConfig::new(3, [Pair::new(0, 2, PairKind::Round)]).is_err());
        assert!(PairingConfig::new(
            4,
            [
                Pair::new(0, 3, PairKind::Round),
                Pair::new(2, 5, PairKind::Square)
            ]
        )
        .is_err());
        assert!(PairingConfig::new(2, [Pair::new(0, 3, PairKind::Round)]).is_err());
        assert!(PairingConfig::new(0, []).is_err());
    }
}
