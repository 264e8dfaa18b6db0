//! The Tamari order on Dyck paths and the interval bijection with sticky
//! trees.
//!
//! `D ⪯ E` holds when the match lengths of `D` are componentwise at most
//! those of `E`.  A sticky tree maps to the interval whose upper path is the
//! contour word of its shape and whose lower path spells the certificate
//! counts: one up step per non-root node followed by as many down steps as
//! nodes it certifies.

use alloc::vec::Vec;
use core::fmt;

use crate::dyck::{DyckPath, Step};
use crate::plane_tree::PlaneTree;
use crate::sticky::{RecoverError, StickyTree};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IntervalError {
    LengthMismatch { lower: usize, upper: usize },
    /// `lower ⪯ upper` fails at the given up step (1-based).
    NotAnInterval { position: usize },
}

impl fmt::Display for IntervalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IntervalError::LengthMismatch { lower, upper } => {
                write!(f, "paths of lengths {lower} and {upper} are incomparable")
            }
            IntervalError::NotAnInterval { position } => {
                write!(f, "lower path exceeds upper path at up step {position}")
            }
        }
    }
}

impl core::error::Error for IntervalError {}

/// Componentwise match-length comparison; errors on unequal lengths.
pub fn tamari_leq(d: &DyckPath, e: &DyckPath) -> Result<bool, IntervalError> {
    if d.len() != e.len() {
        return Err(IntervalError::LengthMismatch { lower: d.len(), upper: e.len() });
    }
    Ok(d.match_lengths()
        .iter()
        .zip(e.match_lengths())
        .all(|(a, b)| *a <= b))
}

/// A pair `lower ⪯ upper` of Dyck paths of the same length.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TamariInterval {
    lower: DyckPath,
    upper: DyckPath,
}

impl TamariInterval {
    pub fn new(lower: DyckPath, upper: DyckPath) -> Result<Self, IntervalError> {
        if lower.len() != upper.len() {
            return Err(IntervalError::LengthMismatch { lower: lower.len(), upper: upper.len() });
        }
        let position = lower
            .match_lengths()
            .iter()
            .zip(upper.match_lengths())
            .position(|(a, b)| *a > b);
        if let Some(i) = position {
            return Err(IntervalError::NotAnInterval { position: i + 1 });
        }
        Ok(TamariInterval { lower, upper })
    }

    pub fn lower(&self) -> &DyckPath {
        &self.lower
    }

    pub fn upper(&self) -> &DyckPath {
        &self.upper
    }

    pub fn order(&self) -> usize {
        self.lower.order()
    }

    /// Both paths have the same type word over `{N, E}`.
    pub fn is_synchronized(&self) -> bool {
        self.lower.path_type() == self.upper.path_type()
    }
}

/// Upper path = contour word of the shape, lower path = `u d^{c(v)}` over the
/// non-root nodes in prefix order.  Undefined for the edgeless tree.
pub fn sticky_to_interval(tree: &StickyTree) -> Option<TamariInterval> {
    if tree.size() == 0 {
        return None;
    }
    let upper = tree.shape().contour_word();
    let mut steps = Vec::with_capacity(upper.len());
    for c in tree.certificate_counts() {
        steps.push(Step::Up);
        steps.extend(core::iter::repeat(Step::Down).take(c));
    }
    let lower = DyckPath::new(steps).expect("certificate counts spell a Dyck path");
    Some(TamariInterval::new(lower, upper).expect("the pair is always an interval"))
}

/// Shape from the upper path, certificate counts from the lower path, labels
/// by recovery.  Total inverse of [`sticky_to_interval`] on intervals.
pub fn interval_to_sticky(interval: &TamariInterval) -> Result<StickyTree, RecoverError> {
    let shape = PlaneTree::from_contour(interval.upper());
    // counts: down-run length after each up step of the lower path
    let mut counts = Vec::with_capacity(interval.order());
    for s in interval.lower().steps() {
        match s {
            Step::Up => counts.push(0usize),
            Step::Down => *counts.last_mut().expect("valid path starts with an up step") += 1,
        }
    }
    StickyTree::recover_labels(&shape, &counts)
}

/// All Tamari intervals of order `n`, by filtering ordered pairs.
pub fn enumerate_intervals(n: usize) -> Vec<TamariInterval> {
    let paths = DyckPath::enumerate(n);
    let mut out = Vec::new();
    for upper in &paths {
        for lower in &paths {
            if let Ok(i) = TamariInterval::new(lower.clone(), upper.clone()) {
                out.push(i);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sticky::enumerate_sticky;

    fn p(w: &str) -> DyckPath {
        DyckPath::parse(w).unwrap()
    }

    fn sticky_path(labels: &[usize]) -> StickyTree {
        let parents: Vec<Option<usize>> = (0..=labels.len())
            .map(|i| if i == 0 { None } else { Some(i - 1) })
            .collect();
        let shape = PlaneTree::from_parents(&parents).unwrap();
        let mut all = alloc::vec![0];
        all.extend_from_slice(labels);
        StickyTree::validate(shape, all).unwrap()
    }

    #[test]
    fn leq_examples() {
        assert_eq!(tamari_leq(&p("udud"), &p("uudd")), Ok(true));
        assert_eq!(tamari_leq(&p("uudd"), &p("udud")), Ok(false));
        assert!(tamari_leq(&p("ud"), &p("udud")).is_err());
        for d in DyckPath::enumerate(4) {
            assert_eq!(tamari_leq(&d, &d), Ok(true));
        }
    }

    #[test]
    fn partial_order_axioms() {
        // reflexive, antisymmetric, transitive up to length 12
        for n in 0..=6 {
            let paths = DyckPath::enumerate(n);
            for a in &paths {
                for b in &paths {
                    let ab = tamari_leq(a, b).unwrap();
                    let ba = tamari_leq(b, a).unwrap();
                    if ab && ba {
                        assert_eq!(a, b);
                    }
                    if n <= 4 {
                        for c in &paths {
                            if ab && tamari_leq(b, c).unwrap() {
                                assert!(tamari_leq(a, c).unwrap());
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn synchronized_examples() {
        let i = TamariInterval::new(p("udud"), p("udud")).unwrap();
        assert!(i.is_synchronized());
        let i = TamariInterval::new(p("udud"), p("uudd")).unwrap();
        assert!(!i.is_synchronized());
        let i = TamariInterval::new(p("uudd"), p("uudd")).unwrap();
        assert!(i.is_synchronized());
    }

    #[test]
    fn sticky_to_interval_examples() {
        let i = sticky_to_interval(&sticky_path(&[1, 0])).unwrap();
        assert_eq!((i.lower().to_string(), i.upper().to_string()), ("uudd".into(), "uudd".into()));
        let i = sticky_to_interval(&sticky_path(&[0, 0])).unwrap();
        assert_eq!((i.lower().to_string(), i.upper().to_string()), ("udud".into(), "uudd".into()));
        let star = PlaneTree::from_parents(&[None, Some(0), Some(0)]).unwrap();
        let t = StickyTree::validate(star, alloc::vec![0, 0, 0]).unwrap();
        let i = sticky_to_interval(&t).unwrap();
        assert_eq!((i.lower().to_string(), i.upper().to_string()), ("udud".into(), "udud".into()));
    }

    #[test]
    fn interval_to_sticky_examples() {
        let t = interval_to_sticky(&TamariInterval::new(p("uudd"), p("uudd")).unwrap()).unwrap();
        assert_eq!(t.labels(), &[0, 1, 0]);
        let t = interval_to_sticky(&TamariInterval::new(p("udud"), p("uudd")).unwrap()).unwrap();
        assert_eq!(t.labels(), &[0, 0, 0]);
        let t = interval_to_sticky(&TamariInterval::new(p("udud"), p("udud")).unwrap()).unwrap();
        assert_eq!(t.shape().parents(), &[None, Some(0), Some(0)]);
    }

    #[test]
    fn enumerate_counts() {
        assert_eq!(enumerate_intervals(1).len(), 1);
        assert_eq!(enumerate_intervals(2).len(), 3);
        assert_eq!(enumerate_intervals(3).len(), 13);
        assert_eq!(enumerate_intervals(4).len(), 68);
    }

    #[test]
    fn bijection_round_trip() {
        for n in 1..=5 {
            let trees = enumerate_sticky(n);
            let mut images: Vec<TamariInterval> = trees
                .iter()
                .map(|t| sticky_to_interval(t).unwrap())
                .collect();
            for (t, i) in trees.iter().zip(&images) {
                assert_eq!(&interval_to_sticky(i).unwrap(), t);
            }
            images.sort();
            images.dedup();
            assert_eq!(images.len(), trees.len());
            assert_eq!(images.len(), enumerate_intervals(n).len());
        }
    }

    #[test]
    fn synchronized_iff_internal_primary() {
        for n in 1..=5 {
            for t in enumerate_sticky(n) {
                let all_internal_primary = (1..t.shape().node_count())
                    .filter(|&v| !t.shape().is_leaf(v))
                    .all(|v| t.is_primary(v));
                let i = sticky_to_interval(&t).unwrap();
                assert_eq!(i.is_synchronized(), all_internal_primary, "n={n}");
            }
        }
    }
}
