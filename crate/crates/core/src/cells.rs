//! Cells of the two disk models.
//!
//! In the separatrix disk model the boundary arc between `s_{l-1}` and `s_l`
//! is the end `e_l`. Walking along a cell boundary from arc `e_l` reaches
//! `s_l`, follows its block back to the block's cyclic predecessor `p`, and
//! resumes on arc `e_{p+1}`. Cells are therefore the cycles of
//! `l -> pred(l) + 1`, and the separatrices bounding a cell are `l` and
//! `pred(l)` for each of its ends.
//!
//! In the transversal disk model the chords are homoclinic pairs between
//! separatrix points and transversals between end points; regions are
//! labelled with a single stack sweep around the circle.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::model::{index_count, validate_separatrix, SeparatrixData, TransversalData};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CellKind {
    AlphaOmega,
    OddSepal,
    EvenSepal,
    OddCenter,
    EvenCenter,
}

/// A classified cell of the separatrix disk model.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cell {
    pub kind: CellKind,
    /// End indices on the cell boundary, sorted.
    pub ends: Vec<usize>,
    /// Separatrix indices on the cell boundary, sorted.
    pub separatrices: Vec<usize>,
    /// Ends whose index is not a homoclinic index: one for a sepal, an
    /// odd/even pair for an αω cell, none for a center.
    pub free_ends: Vec<usize>,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct CellReport {
    pub alpha_omega: usize,
    pub odd_sepal: usize,
    pub even_sepal: usize,
    pub odd_center: usize,
    pub even_center: usize,
}

impl CellReport {
    pub fn sepal(&self) -> usize {
        self.odd_sepal + self.even_sepal
    }

    pub fn center(&self) -> usize {
        self.odd_center + self.even_center
    }

    pub fn total(&self) -> usize {
        self.alpha_omega + self.sepal() + self.center()
    }
}

/// Cyclic predecessor of `l` within its block.
fn predecessor(blocks: &[Vec<usize>], block_of: &[usize], l: usize) -> usize {
    let block = &blocks[block_of[l]];
    let pos = block
        .iter()
        .position(|&x| x == l)
        .expect("index in its block");
    block[(pos + block.len() - 1) % block.len()]
}

/// Unclassified cells as sorted end lists, given the block of every index.
fn end_cycles(blocks: &[Vec<usize>], block_of: &[usize]) -> Vec<Vec<usize>> {
    let n = block_of.len();
    let pred = |l| predecessor(blocks, block_of, l);
    let mut seen = vec![false; n];
    let mut cycles = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut cycle = Vec::new();
        let mut l = start;
        while !seen[l] {
            seen[l] = true;
            cycle.push(l);
            l = (pred(l) + 1) % n;
        }
        cycle.sort_unstable();
        cycles.push(cycle);
    }
    cycles
}

/// All cells of a valid separatrix data set, classified. Fails if the data
/// is structurally invalid or some cell is not one of the five kinds.
pub fn separatrix_cells(data: &SeparatrixData) -> Result<Vec<Cell>> {
    let report = validate_separatrix(data);
    if !report.is_pass() {
        return Err(Error::Invalid(report.to_string()));
    }
    let blocks = data.classes();
    let block_of = data.block_of();
    let h = data.homoclinic();
    let pred = |l| predecessor(blocks, &block_of, l);

    end_cycles(blocks, &block_of)
        .into_iter()
        .map(|ends| {
            let mut separatrices: Vec<usize> = ends.iter().flat_map(|&l| [l, pred(l)]).collect();
            separatrices.sort_unstable();
            separatrices.dedup();
            let free_ends: Vec<usize> = ends.iter().copied().filter(|l| !h.contains(l)).collect();

            // landing separatrices on the boundary, grouped by landing point
            let mut landing: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
            for &l in separatrices.iter().filter(|l| !h.contains(l)) {
                landing.entry(block_of[l]).or_default().push(l);
            }
            let odd_ends = ends.iter().filter(|&&l| l % 2 == 1).count();
            let parity = match (odd_ends, ends.len() - odd_ends) {
                (_, 0) => Some(true),
                (0, _) => Some(false),
                _ => None,
            };
            let fail = |reason: &str| Error::InadmissibleCell {
                ends: ends.clone(),
                reason: reason.to_string(),
            };

            let kind = match landing.len() {
                0 => {
                    let odd = parity.ok_or_else(|| fail("center cell with ends of both parities"))?;
                    if !free_ends.is_empty() {
                        return Err(fail("center cell with a non-homoclinic end"));
                    }
                    if odd {
                        CellKind::OddCenter
                    } else {
                        CellKind::EvenCenter
                    }
                }
                1 => {
                    let odd = parity.ok_or_else(|| fail("sepal cell with ends of both parities"))?;
                    let seps = landing.values().next().unwrap();
                    let even_seps = seps.iter().filter(|&&l| l % 2 == 0).count();
                    if seps.len() != 2 || even_seps != 1 {
                        return Err(fail(
                            "sepal cell needs exactly one incoming and one outgoing landing separatrix",
                        ));
                    }
                    if free_ends.len() != 1 {
                        return Err(fail("sepal cell needs exactly one non-homoclinic end"));
                    }
                    if odd {
                        CellKind::OddSepal
                    } else {
                        CellKind::EvenSepal
                    }
                }
                2 => {
                    if parity.is_some() {
                        return Err(fail("αω cell needs both odd and even ends"));
                    }
                    let groups: Vec<&Vec<usize>> = landing.values().collect();
                    let pure = |g: &Vec<usize>, odd: bool| {
                        (1..=2).contains(&g.len()) && g.iter().all(|l| (l % 2 == 1) == odd)
                    };
                    let split = (pure(groups[0], false) && pure(groups[1], true))
                        || (pure(groups[0], true) && pure(groups[1], false));
                    if !split {
                        return Err(fail(
                            "αω cell needs one incoming landing point and one outgoing landing point",
                        ));
                    }
                    let odd_free = free_ends.iter().filter(|&&l| l % 2 == 1).count();
                    if free_ends.len() != 2 || odd_free != 1 {
                        return Err(fail(
                            "αω cell needs exactly one odd and one even non-homoclinic end",
                        ));
                    }
                    CellKind::AlphaOmega
                }
                _ => return Err(fail("cell touches more than two landing points")),
            };
            Ok(Cell {
                kind,
                ends,
                separatrices,
                free_ends,
            })
        })
        .collect()
}

/// Counts of each cell kind in the separatrix disk model.
pub fn classify_cells(data: &SeparatrixData) -> Result<CellReport> {
    let mut report = CellReport::default();
    for cell in separatrix_cells(data)? {
        let slot = match cell.kind {
            CellKind::AlphaOmega => &mut report.alpha_omega,
            CellKind::OddSepal => &mut report.odd_sepal,
            CellKind::EvenSepal => &mut report.even_sepal,
            CellKind::OddCenter => &mut report.odd_center,
            CellKind::EvenCenter => &mut report.even_center,
        };
        *slot += 1;
    }
    Ok(report)
}

/// A connected component of the disk minus homoclinic pairs and transversals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransversalCell {
    /// Landing separatrix indices (not in `H`) on the boundary, sorted.
    pub landing: Vec<usize>,
    /// End indices (not in `T`) on the boundary, sorted.
    pub ends: Vec<usize>,
}

impl TransversalCell {
    /// A transversal cell without landing separatrices is a center cell.
    pub fn is_center(&self) -> bool {
        self.landing.is_empty()
    }
}

/// Components of the transversal disk model.
///
/// Separatrix `s_l` sits at doubled position `2l` and end `e_l` at `2l - 1`
/// (mod `2n`). The data is assumed valid.
pub fn transversal_cells(data: &TransversalData) -> Vec<TransversalCell> {
    let n = index_count(data.degree());
    let m = 2 * n;
    let end_pos = |l: usize| (2 * l + m - 1) % m;
    let mut partner: Vec<Option<usize>> = vec![None; m];
    for (a, b) in data.chords() {
        let (pa, pb) = if data.homoclinic().contains(&a) {
            (2 * a, 2 * b)
        } else {
            (end_pos(a), end_pos(b))
        };
        partner[pa] = Some(pb);
        partner[pb] = Some(pa);
    }

    let mut cells = vec![TransversalCell {
        landing: Vec::new(),
        ends: Vec::new(),
    }];
    let mut stack = Vec::new();
    let mut current = 0;
    for (p, &other) in partner.iter().enumerate() {
        match other {
            Some(q) if q > p => {
                stack.push(current);
                current = cells.len();
                cells.push(TransversalCell {
                    landing: Vec::new(),
                    ends: Vec::new(),
                });
            }
            Some(_) => current = stack.pop().expect("chords are non-crossing"),
            None if p % 2 == 0 => cells[current].landing.push(p / 2),
            None => cells[current].ends.push(p.div_ceil(2) % n),
        }
    }
    for c in &mut cells {
        c.ends.sort_unstable();
    }
    cells
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sep(d: usize, classes: &[&[usize]], h: &[usize]) -> SeparatrixData {
        SeparatrixData::new(d, classes.iter().map(|c| c.to_vec()), h.iter().copied())
    }

    #[test]
    fn figure_pair_cells() {
        let data = sep(5, &[&[0, 3], &[6, 7], &[1, 2], &[4], &[5]], &[0, 3, 6, 7]);
        let report = classify_cells(&data).unwrap();
        assert_eq!(report.sepal(), 2);
        assert_eq!(report.alpha_omega, 1);
        assert_eq!(report.center(), 1);

        let cells = separatrix_cells(&data).unwrap();
        let aw = cells
            .iter()
            .find(|c| c.kind == CellKind::AlphaOmega)
            .unwrap();
        assert_eq!(aw.ends, vec![0, 4, 5, 6]);
        assert_eq!(aw.free_ends, vec![4, 5]);
    }

    #[test]
    fn degree_two_cells() {
        let hom = classify_cells(&sep(2, &[&[0, 1]], &[0, 1])).unwrap();
        assert_eq!((hom.odd_center, hom.even_center, hom.total()), (1, 1, 2));

        let sepal = classify_cells(&sep(2, &[&[0, 1]], &[])).unwrap();
        assert_eq!(
            (sepal.odd_sepal, sepal.even_sepal, sepal.total()),
            (1, 1, 2)
        );

        let aw = classify_cells(&sep(2, &[&[0], &[1]], &[])).unwrap();
        assert_eq!((aw.alpha_omega, aw.total()), (1, 1));
    }

    #[test]
    fn inadmissible_cell_is_reported() {
        // four distinct landing points around one cell
        let data = sep(3, &[&[0], &[1], &[2], &[3]], &[]);
        assert!(matches!(
            classify_cells(&data),
            Err(Error::InadmissibleCell { .. })
        ));
    }

    #[test]
    fn transversal_cell_count_is_chords_plus_one() {
        let t = TransversalData::from_pairs(5, &[(0, 3), (6, 7)], &[(4, 5)]).unwrap();
        let cells = transversal_cells(&t);
        assert_eq!(cells.len(), 4);
        assert_eq!(cells.iter().filter(|c| c.is_center()).count(), 1);
    }

    #[test]
    fn degree_one_has_no_cells() {
        let d1 = sep(1, &[], &[]);
        assert_eq!(classify_cells(&d1).unwrap().total(), 0);
        let t = TransversalData::from_pairs(1, &[], &[]).unwrap();
        assert_eq!(transversal_cells(&t).len(), 1);
    }
}
