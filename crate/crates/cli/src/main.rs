//! Command line surface: enumeration, conversion, verification, statistics
//! and export for the object families of the library.
//!
//! Exit codes: 0 success, 1 validation or data failure, 2 usage error.

mod codec;

use std::collections::BTreeMap;
use std::io::{Read, Write};
use std::path::PathBuf;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};

use codec::{Class, Object};
use stickytree::decorated;
use stickytree::dyck::DyckPath;
use stickytree::flows::{count_closed_flows, flow_to_sticky, forest_of_dyck, sticky_to_flow};
use stickytree::map_bijections::{
    map_to_sticky, sticky_to_map, sticky_to_triangulation, triangulation_to_sticky,
};
use stickytree::oracles::{enumerate_bridgeless_maps, formula_count};
use stickytree::sticky::{enumerate_sticky, StickyTree};
use stickytree::tamari::{enumerate_intervals, interval_to_sticky, sticky_to_interval, tamari_leq};

/// The largest size accepted by enumerating commands.
const SIZE_CAP: usize = 8;

#[derive(Parser)]
#[command(name = "stickytree", version, about = "bridgeless planar maps, triangulations, sticky trees, Tamari intervals and flows")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List all objects of a class and size, one JSON object per line.
    Enumerate {
        #[arg(long, value_enum)]
        class: Class,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Convert objects between classes, one JSON object per line.
    Convert {
        #[arg(long, value_enum)]
        from: Class,
        #[arg(long, value_enum)]
        to: Class,
        #[arg(long, name = "in")]
        input: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run a verification suite.
    Verify {
        #[arg(long, value_enum)]
        suite: Suite,
        #[arg(long)]
        n: Option<usize>,
    },
    /// Print the histogram of a statistic over all objects of a size.
    Stats {
        #[arg(long, value_enum)]
        statistic: Statistic,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Re-emit objects as normalized JSON or as DOT graphs.
    Export {
        #[arg(long, value_enum)]
        format: Format,
        #[arg(long, value_enum)]
        class: Class,
        #[arg(long, name = "in")]
        input: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Suite {
    Counts,
    Roundtrip,
    Thm41,
    Stats,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Statistic {
    Primary,
    InitialRise,
    FinalDescent,
    Vertices,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Dot,
}

fn main() {
    let cli = Cli::parse();
    if let Err(e) = run(cli.command) {
        eprintln!("error: {e:#}");
        std::process::exit(1);
    }
}

fn run(command: Command) -> Result<()> {
    match command {
        Command::Enumerate { class, n, out } => {
            let lines = enumerate(class, n)?;
            write_lines(out, &lines)
        }
        Command::Convert { from, to, input, out } => {
            let mut lines = Vec::new();
            for value in read_values(input)? {
                let object = codec::from_value(from, &value)?;
                let tree = object_to_sticky(from, object)?;
                if let Some(converted) = sticky_to_object(to, &tree)? {
                    lines.push(codec::to_value(&converted).to_string());
                }
            }
            write_lines(out, &lines)
        }
        Command::Verify { suite, n } => verify(suite, n),
        Command::Stats { statistic, n, out } => {
            let histogram = statistics(statistic, n)?;
            let lines: Vec<String> = histogram
                .iter()
                .map(|(value, count)| format!("{value} {count}"))
                .collect();
            write_lines(out, &lines)
        }
        Command::Export { format, class, input, out } => {
            if format == Format::Dot
                && !matches!(class, Class::Bridgeless | Class::Triangulation)
            {
                // not a data failure: the combination itself is unsupported
                eprintln!("error: DOT export is only defined for map classes");
                std::process::exit(2);
            }
            let mut chunks = Vec::new();
            for value in read_values(input)? {
                let object = codec::from_value(class, &value)?;
                match (format, &object) {
                    (Format::Dot, Object::Map(m)) => chunks.push(codec::map_to_dot(m)),
                    _ => chunks.push(codec::to_value(&object).to_string()),
                }
            }
            write_lines(out, &chunks)
        }
    }
}

fn check_cap(n: usize) -> Result<()> {
    if n > SIZE_CAP {
        bail!("size {n} exceeds the cap of {SIZE_CAP}");
    }
    Ok(())
}

fn enumerate(class: Class, n: usize) -> Result<Vec<String>> {
    check_cap(n)?;
    let trees = enumerate_sticky(n);
    let objects: Vec<Object> = match class {
        Class::Sticky => trees.into_iter().map(Object::Sticky).collect(),
        Class::Bridgeless => trees.iter().map(|t| Object::Map(sticky_to_map(t))).collect(),
        Class::Triangulation => trees
            .iter()
            .map(|t| Object::Map(sticky_to_triangulation(t)))
            .collect(),
        Class::Interval => enumerate_intervals(n).into_iter().map(Object::Interval).collect(),
        Class::Flow => trees.iter().map(|t| Object::Flow(sticky_to_flow(t))).collect(),
        Class::Decorated => trees
            .iter()
            .map(|t| Object::Decorated(decorated::expand(t)))
            .collect(),
    };
    Ok(objects.iter().map(|o| codec::to_value(o).to_string()).collect())
}

fn object_to_sticky(class: Class, object: Object) -> Result<StickyTree> {
    Ok(match (class, object) {
        (Class::Sticky, Object::Sticky(t)) => t,
        (Class::Bridgeless, Object::Map(m)) => {
            map_to_sticky(&m).map_err(|e| anyhow!("exploration failed: {e}"))?
        }
        (Class::Triangulation, Object::Map(m)) => {
            triangulation_to_sticky(&m).map_err(|e| anyhow!("core exploration failed: {e}"))?
        }
        (Class::Interval, Object::Interval(i)) => {
            interval_to_sticky(&i).map_err(|e| anyhow!("label recovery failed: {e}"))?
        }
        (Class::Flow, Object::Flow(f)) => {
            flow_to_sticky(&f).map_err(|e| anyhow!("label recovery failed: {e}"))?
        }
        (Class::Decorated, Object::Decorated(d)) => {
            d.contract().map_err(|e| anyhow!("contraction failed: {e}"))?
        }
        _ => unreachable!("class determines the parsed variant"),
    })
}

/// `None` means the object has no representation in the class, which only
/// happens for the empty interval.
fn sticky_to_object(class: Class, tree: &StickyTree) -> Result<Option<Object>> {
    Ok(match class {
        Class::Sticky => Some(Object::Sticky(tree.clone())),
        Class::Bridgeless => Some(Object::Map(sticky_to_map(tree))),
        Class::Triangulation => Some(Object::Map(sticky_to_triangulation(tree))),
        Class::Interval => sticky_to_interval(tree).map(Object::Interval),
        Class::Flow => Some(Object::Flow(sticky_to_flow(tree))),
        Class::Decorated => Some(Object::Decorated(decorated::expand(tree))),
    })
}

fn verify(suite: Suite, n: Option<usize>) -> Result<()> {
    match suite {
        Suite::Counts => {
            let n = n.unwrap_or(4);
            if !(1..=6).contains(&n) {
                bail!("counts are verified for sizes 1..=6");
            }
            let sticky = enumerate_sticky(n).len() as u128;
            let intervals = enumerate_intervals(n).len() as u128;
            let formula = formula_count(n);
            let maps = (n <= 4).then(|| enumerate_bridgeless_maps(n).len() as u128);
            let agree = sticky == formula
                && intervals == formula
                && maps.map_or(true, |m| m == formula);
            let maps_column = maps.map_or("-".to_string(), |m| m.to_string());
            println!(
                "{sticky} {maps_column} {intervals} {formula} {}",
                if agree { "ok" } else { "fail" }
            );
            if !agree {
                bail!("counts disagree at size {n}");
            }
        }
        Suite::Roundtrip => {
            let n = n.unwrap_or(6);
            check_cap(n)?;
            let (mut sr, mut rs, mut pq, mut qp) = (0usize, 0usize, 0usize, 0usize);
            for k in 0..=n {
                let trees = enumerate_sticky(k);
                for t in &trees {
                    if &map_to_sticky(&sticky_to_map(t))? != t {
                        bail!("exploration does not invert gluing at size {k}");
                    }
                    sr += 1;
                }
                if k <= 4 {
                    for m in enumerate_bridgeless_maps(k) {
                        let back = sticky_to_map(&map_to_sticky(&m)?);
                        if back.canonicalize()? != m {
                            bail!("gluing does not invert exploration at size {k}");
                        }
                        rs += 1;
                    }
                }
                if k <= 5 {
                    for t in &trees {
                        let image = sticky_to_triangulation(t);
                        if &triangulation_to_sticky(&image)? != t {
                            bail!("core exploration does not invert reconstruction at size {k}");
                        }
                        pq += 1;
                        let again = sticky_to_triangulation(&triangulation_to_sticky(&image)?);
                        if again.canonicalize()? != image.canonicalize()? {
                            bail!("reconstruction does not invert core exploration at size {k}");
                        }
                        qp += 1;
                    }
                }
            }
            println!("sr={sr} rs={rs} pq={pq} qp={qp} ok");
        }
        Suite::Thm41 => {
            let n = n.unwrap_or(6);
            if n > 6 {
                bail!("flow counting is capped at 12 nodes, i.e. size 6");
            }
            let mut paths = 0usize;
            for k in 1..=n {
                let all = DyckPath::enumerate(k);
                for upper in &all {
                    let below = all
                        .iter()
                        .filter(|lower| tamari_leq(lower, upper).unwrap())
                        .count() as u128;
                    let flows = count_closed_flows(&forest_of_dyck(upper))
                        .map_err(|e| anyhow!("flow counting failed: {e}"))?;
                    if below != flows {
                        bail!("flow count mismatch on {upper} ({below} vs {flows})");
                    }
                    paths += 1;
                }
            }
            println!("paths={paths} ok");
        }
        Suite::Stats => {
            let n = n.unwrap_or(6);
            check_cap(n)?;
            for k in 0..=n {
                for t in enumerate_sticky(k) {
                    if sticky_to_map(&t).vertex_count() != t.primary_count() + 1 {
                        bail!("vertex count does not transport at size {k}");
                    }
                    if sticky_to_flow(&t).negative_input_count() != t.primary_count() {
                        bail!("negative inputs do not transport at size {k}");
                    }
                }
                if k >= 1 {
                    let intervals = enumerate_intervals(k);
                    let mut rises: Vec<usize> =
                        intervals.iter().map(|i| i.upper().initial_rise()).collect();
                    let mut descents: Vec<usize> =
                        intervals.iter().map(|i| i.upper().final_descent()).collect();
                    rises.sort_unstable();
                    descents.sort_unstable();
                    if rises != descents {
                        bail!("initial rises and final descents differ at size {k}");
                    }
                }
            }
            println!("ok");
        }
    }
    Ok(())
}

fn statistics(statistic: Statistic, n: usize) -> Result<BTreeMap<usize, usize>> {
    check_cap(n)?;
    let mut histogram = BTreeMap::new();
    let mut add = |value: usize| *histogram.entry(value).or_insert(0) += 1;
    match statistic {
        Statistic::Primary => {
            for t in enumerate_sticky(n) {
                add(t.primary_count());
            }
        }
        Statistic::Vertices => {
            for t in enumerate_sticky(n) {
                add(sticky_to_map(&t).vertex_count());
            }
        }
        Statistic::InitialRise => {
            for i in enumerate_intervals(n) {
                add(i.upper().initial_rise());
            }
        }
        Statistic::FinalDescent => {
            for i in enumerate_intervals(n) {
                add(i.upper().final_descent());
            }
        }
    }
    Ok(histogram)
}

fn read_values(input: Option<PathBuf>) -> Result<Vec<serde_json::Value>> {
    let text = match input {
        Some(path) => std::fs::read_to_string(&path)
            .with_context(|| format!("cannot read {}", path.display()))?,
        None => {
            let mut buffer = String::new();
            std::io::stdin().read_to_string(&mut buffer).context("cannot read stdin")?;
            buffer
        }
    };
    text.lines()
        .map(str::trim)
        .filter(|line| !line.is_empty())
        .map(|line| serde_json::from_str(line).with_context(|| format!("bad json line: {line}")))
        .collect()
}

fn write_lines(out: Option<PathBuf>, lines: &[String]) -> Result<()> {
    let mut text = lines.join("\n");
    if !text.is_empty() {
        text.push('\n');
    }
    match out {
        Some(path) => std::fs::write(&path, text)
            .with_context(|| format!("cannot write {}", path.display()))?,
        None => std::io::stdout().write_all(text.as_bytes()).context("cannot write stdout")?,
    }
    Ok(())
}
