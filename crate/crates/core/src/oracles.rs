//! Brute-force enumerations and the closed counting formula, used to check
//! the structured constructions against independent ground truth.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use crate::map_bijections::sticky_to_triangulation;
use crate::planar_map::RootedMap;
use crate::sticky::enumerate_sticky;

/// `2 / (n (n + 1)) * C(4n + 1, n - 1)`, exactly in `u128`.
pub fn formula_count(n: usize) -> u128 {
    if n == 0 {
        return 1;
    }
    let n = n as u128;
    let mut binom: u128 = 1;
    // C(4n + 1, n - 1) column by column; each intermediate quotient is exact
    for k in 1..=(n - 1) {
        binom = binom * (4 * n + 2 - k) / k;
    }
    binom * 2 / (n * (n + 1))
}

/// All rooted bridgeless planar maps with `n` edges, canonicalized, by brute
/// force over rotation systems.  Exponential; intended for `n <= 4`.
pub fn enumerate_bridgeless_maps(n: usize) -> Vec<RootedMap> {
    if n == 0 {
        return vec![RootedMap::single_vertex()];
    }
    let darts = 2 * n;
    let alpha: Vec<usize> = (0..darts).map(|d| d ^ 1).collect();
    let mut seen = BTreeSet::new();
    let mut sigma: Vec<usize> = (0..darts).collect();
    permute(&mut sigma, 0, &mut |sigma| {
        let Ok(map) = RootedMap::new(alpha.clone(), sigma.to_vec(), 0) else {
            return;
        };
        if map.is_planar() && map.is_bridgeless() {
            seen.insert(map.canonicalize().expect("rooted map canonicalizes"));
        }
    });
    seen.into_iter().collect()
}

/// Heap-style permutation generation over `v[from..]`.
fn permute(v: &mut [usize], from: usize, f: &mut impl FnMut(&[usize])) {
    if from == v.len() {
        f(v);
        return;
    }
    for i in from..v.len() {
        v.swap(from, i);
        permute(v, from + 1, f);
        v.swap(from, i);
    }
}

/// Images of all sticky trees with `n` edges under the core reconstruction,
/// canonicalized and checked for injectivity.
pub fn enumerate_triangulations_via_reconstruction(n: usize) -> Vec<RootedMap> {
    let trees = enumerate_sticky(n);
    let mut out: Vec<RootedMap> = trees
        .iter()
        .map(|t| {
            sticky_to_triangulation(t)
                .canonicalize()
                .expect("image is rooted")
        })
        .collect();
    let total = out.len();
    out.sort();
    out.dedup();
    assert_eq!(out.len(), total, "reconstruction must be injective");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::map_bijections::map_to_sticky;

    #[test]
    fn formula_values() {
        let values: Vec<u128> = (0..=6).map(formula_count).collect();
        assert_eq!(values, [1, 1, 3, 13, 68, 399, 2530]);
    }

    #[test]
    fn brute_force_map_counts() {
        for (n, want) in [(0, 1), (1, 1), (2, 3), (3, 13)] {
            assert_eq!(enumerate_bridgeless_maps(n).len(), want, "n={n}");
        }
    }

    #[test]
    #[ignore = "runs the 8! brute force; enabled by the acceptance suite"]
    fn brute_force_map_count_four() {
        assert_eq!(enumerate_bridgeless_maps(4).len(), 68);
    }

    #[test]
    fn exploration_covers_brute_force() {
        // gluing hits every brute-force map exactly once
        for n in 0..=3 {
            let maps = enumerate_bridgeless_maps(n);
            let mut glued: Vec<RootedMap> = enumerate_sticky(n)
                .iter()
                .map(|t| {
                    crate::map_bijections::sticky_to_map(t)
                        .canonicalize()
                        .unwrap()
                })
                .collect();
            glued.sort();
            glued.dedup();
            assert_eq!(glued, maps, "n={n}");
            for m in &maps {
                map_to_sticky(m).unwrap();
            }
        }
    }

    #[test]
    fn triangulation_counts() {
        for (n, want) in [(0, 1), (1, 1), (2, 3), (3, 13), (4, 68)] {
            assert_eq!(
                enumerate_triangulations_via_reconstruction(n).len(),
                want,
                "n={n}"
            );
        }
    }
}
