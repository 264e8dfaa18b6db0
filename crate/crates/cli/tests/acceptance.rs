//! End-to-end acceptance suite.  Each test covers one exit criterion and
//! prints a single `acceptance <name>: pass` line when it holds.

use std::process::{Command, Stdio};
use std::time::Instant;

use stickytree::decorated::{decorated_to_sync_sticky, expand, sync_sticky_to_decorated};
use stickytree::dyck::DyckPath;
use stickytree::flows::{count_closed_flows, forest_of_dyck, sticky_to_flow};
use stickytree::map_bijections::{
    map_to_sticky, sticky_to_map, sticky_to_triangulation, triangulation_to_sticky,
};
use stickytree::oracles::{enumerate_bridgeless_maps, formula_count};
use stickytree::sticky::enumerate_sticky;
use stickytree::tamari::{
    enumerate_intervals, interval_to_sticky, sticky_to_interval, tamari_leq,
};

const BIN: &str = env!("CARGO_BIN_EXE_stickytree");

fn pass(name: &str) {
    println!("acceptance {name}: pass");
}

/// Runs the CLI with `input` on stdin and returns (stdout, exit code).
fn run_cli(args: &[&str], input: &str) -> (String, i32) {
    use std::io::Write;
    let mut child = Command::new(BIN)
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::null())
        .spawn()
        .expect("binary spawns");
    child
        .stdin
        .take()
        .expect("stdin piped")
        .write_all(input.as_bytes())
        .expect("stdin accepts input");
    let out = child.wait_with_output().expect("binary exits");
    (
        String::from_utf8(out.stdout).expect("stdout is utf-8"),
        out.status.code().expect("binary is not signal-killed"),
    )
}

#[test]
fn counts_match_formula() {
    let start = Instant::now();
    for n in 1..=6 {
        let want = formula_count(n);
        assert_eq!(enumerate_sticky(n).len() as u128, want, "sticky n={n}");
        assert_eq!(enumerate_intervals(n).len() as u128, want, "intervals n={n}");
        if n <= 4 {
            assert_eq!(
                enumerate_bridgeless_maps(n).len() as u128,
                want,
                "brute-force maps n={n}"
            );
        }
    }
    let (out, code) = run_cli(&["verify", "--suite", "counts", "--n", "4"], "");
    assert_eq!(out.trim(), "68 68 68 68 ok");
    assert_eq!(code, 0);
    assert!(start.elapsed().as_secs() < 120, "counts must finish under 2 minutes");
    pass("counts");
}

#[test]
fn bijections_round_trip() {
    for n in 0..=6 {
        for t in enumerate_sticky(n) {
            assert_eq!(map_to_sticky(&sticky_to_map(&t)).unwrap(), t, "n={n}");
        }
    }
    for n in 0..=4 {
        for m in enumerate_bridgeless_maps(n) {
            let back = sticky_to_map(&map_to_sticky(&m).unwrap());
            assert_eq!(back.canonicalize().unwrap(), m, "n={n}");
        }
    }
    for n in 0..=5 {
        for t in enumerate_sticky(n) {
            let image = sticky_to_triangulation(&t);
            let peeled = triangulation_to_sticky(&image).unwrap();
            assert_eq!(peeled, t, "peel after reconstruct, n={n}");
            let again = sticky_to_triangulation(&peeled);
            assert_eq!(
                again.canonicalize().unwrap(),
                image.canonicalize().unwrap(),
                "reconstruct after peel, n={n}"
            );
        }
    }
    pass("roundtrip");
}

#[test]
fn triangulation_images_are_triangulations() {
    for n in 0..=5 {
        let mut canon = Vec::new();
        for t in enumerate_sticky(n) {
            let image = sticky_to_triangulation(&t);
            assert!(image.is_triangulation(), "n={n}");
            assert_eq!(image.edge_count(), 3 * (n + 1), "edges, n={n}");
            assert_eq!(image.vertex_count(), n + 3, "vertices, n={n}");
            assert_eq!(image.internal_vertex_count().unwrap(), n, "internal, n={n}");
            canon.push(image.canonicalize().unwrap());
        }
        let total = canon.len();
        canon.sort();
        canon.dedup();
        assert_eq!(canon.len(), total, "distinct images, n={n}");
        if n == 3 {
            assert_eq!(total, 13);
        }
        if n == 4 {
            assert_eq!(total, 68);
        }
    }
    pass("triangulation-images");
}

#[test]
fn interval_bijection() {
    for n in 1..=6 {
        let intervals = enumerate_intervals(n);
        for i in &intervals {
            let t = interval_to_sticky(i).unwrap();
            assert_eq!(t.size(), n);
            let back = sticky_to_interval(&t).expect("nonempty tree maps to an interval");
            assert_eq!(back.lower(), i.lower(), "n={n}");
            assert_eq!(back.upper(), i.upper(), "n={n}");
        }
        let mut images: Vec<_> = enumerate_sticky(n)
            .iter()
            .map(|t| {
                let i = sticky_to_interval(t).unwrap();
                (i.lower().to_string(), i.upper().to_string())
            })
            .collect();
        images.sort();
        images.dedup();
        assert_eq!(images.len(), intervals.len(), "n={n}");
    }
    pass("interval-bijection");
}

#[test]
fn closed_flows_count_down_sets() {
    let start = Instant::now();
    for n in 1..=6 {
        let all = DyckPath::enumerate(n);
        for upper in &all {
            let below = all
                .iter()
                .filter(|lower| tamari_leq(lower, upper).unwrap())
                .count() as u128;
            let flows = count_closed_flows(&forest_of_dyck(upper)).unwrap();
            assert_eq!(below, flows, "path {upper}");
        }
    }
    assert!(start.elapsed().as_secs() < 60, "flow counting must finish under 1 minute");
    pass("flow-counts");
}

#[test]
fn synchronized_iff_all_internal_primary() {
    for n in 1..=6 {
        for t in enumerate_sticky(n) {
            let all_internal_primary = (0..t.size() + 1)
                .skip(1)
                .filter(|&v| !t.shape().is_leaf(v))
                .all(|v| t.is_primary(v));
            let interval = sticky_to_interval(&t).unwrap();
            assert_eq!(interval.is_synchronized(), all_internal_primary, "n={n}");
            if all_internal_primary {
                let decorated = sync_sticky_to_decorated(&t).unwrap();
                assert_eq!(decorated_to_sync_sticky(&decorated).unwrap(), t);
            } else {
                assert!(sync_sticky_to_decorated(&t).is_err());
            }
            let expanded = expand(&t);
            assert_eq!(expanded.contract().unwrap(), t);
        }
    }
    pass("synchronized");
}

#[test]
fn statistics_transport() {
    for n in 0..=6 {
        for t in enumerate_sticky(n) {
            assert_eq!(
                sticky_to_map(&t).vertex_count(),
                t.primary_count() + 1,
                "vertices, n={n}"
            );
            assert_eq!(
                sticky_to_flow(&t).negative_input_count(),
                t.primary_count(),
                "negative inputs, n={n}"
            );
        }
        if n >= 1 {
            let intervals = enumerate_intervals(n);
            let mut rises: Vec<usize> =
                intervals.iter().map(|i| i.upper().initial_rise()).collect();
            let mut descents: Vec<usize> =
                intervals.iter().map(|i| i.upper().final_descent()).collect();
            rises.sort_unstable();
            descents.sort_unstable();
            assert_eq!(rises, descents, "n={n}");
        }
    }
    pass("statistics");
}

#[test]
fn fixture_regressions() {
    // transform name -> (from, to) class pair for the CLI
    let classes = |transform: &str| -> (&'static str, &'static str) {
        match transform {
            "bridgeless-to-sticky" => ("bridgeless", "sticky"),
            "sticky-to-bridgeless" => ("sticky", "bridgeless"),
            "triangulation-to-sticky" => ("triangulation", "sticky"),
            "sticky-to-triangulation" => ("sticky", "triangulation"),
            "sticky-to-interval" => ("sticky", "interval"),
            "decorated-to-sticky" => ("decorated", "sticky"),
            "sticky-to-flow" => ("sticky", "flow"),
            other => panic!("unknown transform {other}"),
        }
    };
    let dir = concat!(env!("CARGO_MANIFEST_DIR"), "/tests/fixtures");
    let mut seen = 0;
    for entry in std::fs::read_dir(dir).expect("fixture directory exists") {
        let path = entry.expect("fixture entry").path();
        let text = std::fs::read_to_string(&path).expect("fixture reads");
        let fixture: serde_json::Value = serde_json::from_str(&text).expect("fixture parses");
        let transform = fixture["transform"].as_str().expect("transform name");
        let (from, to) = classes(transform);
        let input = fixture["input"].to_string();
        let (out, code) = run_cli(&["convert", "--from", from, "--to", to], &input);
        assert_eq!(code, 0, "{transform} converts");
        let got: serde_json::Value = serde_json::from_str(out.trim()).expect("output parses");
        assert_eq!(got, fixture["expected"], "{}", path.display());
        // round-trip guard: converting back and forward again must be stable
        let (back, code) = run_cli(&["convert", "--from", to, "--to", from], out.trim());
        assert_eq!(code, 0, "{transform} converts back");
        let (again, code) = run_cli(&["convert", "--from", from, "--to", to], back.trim());
        assert_eq!(code, 0, "{transform} converts forward again");
        let again: serde_json::Value =
            serde_json::from_str(again.trim()).expect("re-converted output parses");
        assert_eq!(again, fixture["expected"], "round trip through {transform}");
        seen += 1;
    }
    assert_eq!(seen, 7, "all fixtures exercised");
    pass("fixtures");
}
