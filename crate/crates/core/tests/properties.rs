//! Randomized cross-checks of the validating constructors against naive
//! reference implementations.

use proptest::prelude::*;

use stickytree::dyck::DyckPath;
use stickytree::plane_tree::PlaneTree;
use stickytree::sticky::StickyTree;

/// Naive balance check over a `{u, d}` word.
fn naive_is_dyck(word: &str) -> bool {
    let mut height = 0i64;
    for c in word.chars() {
        height += if c == 'u' { 1 } else { -1 };
        if height < 0 {
            return false;
        }
    }
    height == 0
}

/// Naive prefix-order check: every parent must close no earlier sibling
/// subtree, i.e. it lies on the ancestor chain of the previous node.
fn naive_is_preorder(parents: &[Option<usize>]) -> bool {
    if parents.is_empty() || parents[0].is_some() {
        return false;
    }
    for (i, p) in parents.iter().enumerate().skip(1) {
        let Some(p) = *p else { return false };
        if p >= i {
            return false;
        }
        let mut chain = i - 1;
        loop {
            if chain == p {
                break;
            }
            match parents[chain] {
                Some(q) => chain = q,
                None => return false,
            }
            if chain < p {
                return false;
            }
        }
    }
    true
}

proptest! {
    #[test]
    fn dyck_parse_agrees_with_naive(word in "[ud]{0,14}") {
        let parsed = DyckPath::parse(&word);
        prop_assert_eq!(parsed.is_ok(), naive_is_dyck(&word));
        if let Ok(path) = parsed {
            prop_assert_eq!(path.to_string(), word);
        }
    }

    #[test]
    fn tree_constructor_agrees_with_naive(raw in proptest::collection::vec(0usize..8, 0..8)) {
        let parents: Vec<Option<usize>> = core::iter::once(None)
            .chain(raw.iter().enumerate().map(|(i, &r)| Some(r % (i + 1))))
            .collect();
        let built = PlaneTree::from_parents(&parents);
        prop_assert_eq!(built.is_ok(), naive_is_preorder(&parents));
        if let Ok(tree) = built {
            // the contour word encodes the same tree
            let back = PlaneTree::from_contour(&tree.contour_word());
            prop_assert_eq!(back.parents(), tree.parents());
        }
    }

    #[test]
    fn recovered_labels_reproduce_counts(raw in proptest::collection::vec(0usize..4, 1..7)) {
        // scale an arbitrary vector into a candidate certificate profile
        let n = raw.len();
        let mut counts = raw;
        let mut total: usize = counts.iter().sum();
        while total > n {
            let i = counts.iter().position(|&c| c > 0).unwrap();
            counts[i] -= 1;
            total -= 1;
        }
        while total < n {
            counts[n - 1] += 1;
            total += 1;
        }
        for shape in plane_shapes(n) {
            if let Ok(tree) = StickyTree::recover_labels(&shape, &counts) {
                prop_assert_eq!(tree.certificate_counts(), counts.clone());
                prop_assert_eq!(tree.shape().parents(), shape.parents());
            }
        }
    }
}

fn plane_shapes(n: usize) -> Vec<PlaneTree> {
    PlaneTree::enumerate(n)
}
