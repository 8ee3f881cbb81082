use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};
use serde_json::json;
use toric_puzzle::charmap::{enumerate_z2, enumerate_z_bounded, seed_bound_check, CharMatrixFile};
use toric_puzzle::diagram::{build_diagram, Diagram, PreDiagram};
use toric_puzzle::json::{from_str, to_canonical_string};
use toric_puzzle::puzzle::{
    candidates, complete_by_squares, enumerate_realizable, realize_candidate, WedgeContext,
};
use toric_puzzle::simplicial::{cyclic_boundary, ngon, simplex_boundary, ComplexFile};
use toric_puzzle::{CharMatrix, Error, Result, Ring, SimplicialComplex, WedgeVector};

use crate::cache;
use crate::{Cli, Command, ComplexCommand, Format, GenCommand, PuzzlesCommand, RingArg, RingArgs};

/// `{"ring": "z2", "classes": [CharMatrix, ...]}`, classes in canonical order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassListFile {
    pub ring: Ring,
    pub classes: Vec<CharMatrixFile>,
}

pub fn run(cli: &Cli) -> Result<()> {
    let out = match &cli.command {
        Command::Complex {
            command: ComplexCommand::Info { complex, format },
        } => info(&read_complex(complex)?, *format)?,
        Command::Gen { command } => to_canonical_string(&generate(command)?.to_file())?,
        Command::Charmaps { complex, ring } => {
            let k = read_complex(complex)?;
            let classes = class_list(&k, ring)?;
            to_canonical_string(&ClassListFile {
                ring: ring_of(ring.ring),
                classes: classes.iter().map(|c| c.to_file(None)).collect(),
            })?
        }
        Command::Prediagram {
            complex,
            ring,
            format,
        } => {
            let k = read_complex(complex)?;
            let pre = PreDiagram::from_classes(&k, class_list(&k, ring)?)?;
            match format {
                Format::Json => to_canonical_string(&pre.to_file())?,
                Format::Dot => pre.to_dot(),
                Format::Text => text_summary(&pre, None),
            }
        }
        Command::Diagram {
            complex,
            ring,
            format,
        } => {
            let k = read_complex(complex)?;
            let d = diagram(cli, &k, ring)?;
            match format {
                Format::Json => to_canonical_string(&d.to_file())?,
                Format::Dot => d.to_dot(),
                Format::Text => text_summary(d.prediagram(), Some(&d)),
            }
        }
        Command::Puzzles { command } => puzzles(cli, command)?,
        Command::Crosscheck {
            complex,
            j,
            squares,
            limit,
        } => crosscheck(cli, &read_complex(complex)?, &parse_j(j)?, *squares, *limit)?,
    };
    match &cli.output {
        Some(path) => fs::write(path, out).map_err(|e| io_error(path, e)),
        None => {
            print!("{out}");
            Ok(())
        }
    }
}

fn io_error(path: &Path, e: std::io::Error) -> Error {
    Error::InvalidArgument(format!("{}: {e}", path.display()))
}

pub fn read_text(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| io_error(path, e))
}

fn read_complex(path: &Path) -> Result<SimplicialComplex> {
    let file: ComplexFile = from_str(&read_text(path)?)?;
    SimplicialComplex::from_file(&file)
}

fn parse_j(s: &str) -> Result<WedgeVector> {
    WedgeVector::parse(s)
}

fn ring_of(r: RingArg) -> Ring {
    match r {
        RingArg::Z2 => Ring::Z2,
        RingArg::Z => Ring::Z,
    }
}

fn generate(cmd: &GenCommand) -> Result<SimplicialComplex> {
    match cmd {
        GenCommand::Ngon { k } => ngon(*k),
        GenCommand::Cyclic { n, m } => cyclic_boundary(*n, *m),
        GenCommand::Simplex { d } => simplex_boundary(*d),
        GenCommand::Join { a, b } => read_complex(a)?.join(&read_complex(b)?),
        GenCommand::Wedge { complex, vertex } => {
            let k = read_complex(complex)?;
            if *vertex == 0 || *vertex > k.m() {
                return Err(Error::VertexOutOfRange {
                    vertex: *vertex,
                    m: k.m(),
                });
            }
            k.wedge(vertex - 1)
        }
        GenCommand::Expand { complex, j } => {
            let k = read_complex(complex)?;
            let j = parse_j(j)?;
            j.check_len(k.m())?;
            k.expand(&j)
        }
    }
}

fn info(k: &SimplicialComplex, format: Format) -> Result<String> {
    let mnf: Vec<Vec<usize>> = k
        .minimal_non_faces()
        .into_iter()
        .map(|s| s.to_one_based())
        .collect();
    let seed = k.seed_report();
    let bound = seed_bound_check(k, Ring::Z2)?;
    let witness = seed
        .witness
        .map(|d| json!({"v": d.v, "w": d.w, "kind": format!("{:?}", d.kind).to_lowercase()}));
    match format {
        Format::Json => to_canonical_string(&json!({
            "m": k.m(),
            "n": k.n(),
            "picard": k.picard(),
            "facets": k.facets().len(),
            "minimal_non_faces": mnf,
            "primitive_collections": mnf.len(),
            "seed": seed.is_seed,
            "witness": witness,
            "admits_z2": bound.admits_map,
            "seed_bound": {"m": bound.m, "bound": bound.bound, "holds": bound.holds, "asserted": bound.asserted},
        })),
        Format::Text => {
            let mut s = String::new();
            let _ = writeln!(s, "m = {}", k.m());
            let _ = writeln!(s, "n = {}", k.n());
            let _ = writeln!(s, "picard = {}", k.picard());
            let _ = writeln!(s, "facets = {}", k.facets().len());
            let _ = writeln!(s, "minimal_non_faces = {}", mnf.len());
            let _ = writeln!(s, "primitive_collections = {}", mnf.len());
            let _ = writeln!(s, "seed = {}", seed.is_seed);
            if let Some(d) = seed.witness {
                let _ = writeln!(s, "witness = {{{},{}}} {:?}", d.v, d.w, d.kind);
            }
            let _ = writeln!(s, "admits_z2 = {}", bound.admits_map == Some(true));
            let _ = writeln!(
                s,
                "seed_bound = {} <= {} {}",
                bound.m,
                bound.bound,
                if bound.holds { "holds" } else { "fails" }
            );
            Ok(s)
        }
        Format::Dot => Err(Error::InvalidArgument(
            "complex info has no dot output".into(),
        )),
    }
}

pub fn class_list(k: &SimplicialComplex, args: &RingArgs) -> Result<Vec<CharMatrix>> {
    let ring = ring_of(args.ring);
    if let Some(path) = &args.classes {
        let file: ClassListFile = from_str(&read_text(path)?)?;
        if file.ring != ring {
            return Err(Error::WrongRing {
                expected: ring.name(),
                found: file.ring.name(),
            });
        }
        let mut classes = file
            .classes
            .iter()
            .map(|c| CharMatrix::from_file(c)?.canonical())
            .collect::<Result<Vec<_>>>()?;
        classes.sort();
        classes.dedup();
        return Ok(classes);
    }
    let found = match ring {
        Ring::Z2 => enumerate_z2(k)?,
        Ring::Z => {
            if args.bound < 1 {
                return Err(Error::InvalidArgument("bound must be at least 1".into()));
            }
            enumerate_z_bounded(k, args.bound)?
        }
    };
    Ok(found.into_iter().map(|c| c.canonical).collect())
}

fn diagram(cli: &Cli, k: &SimplicialComplex, args: &RingArgs) -> Result<Diagram> {
    let classes_text = match &args.classes {
        Some(p) => Some(read_text(p)?),
        None => None,
    };
    let key = cache::key(&json!({
        "kind": "diagram",
        "complex": k.to_file(),
        "ring": ring_of(args.ring),
        "bound": if args.ring == RingArg::Z && classes_text.is_none() { Some(args.bound) } else { None },
        "classes": classes_text,
    }))?;
    if let Some(dir) = &cli.cache_dir {
        if let Some(text) = cache::load(dir, "diagram", &key)? {
            return Diagram::from_file(k, &from_str(&text)?);
        }
    }
    let d = match (args.ring, &args.classes) {
        (RingArg::Z2, None) => build_diagram(k, Ring::Z2)?,
        _ => Diagram::from_prediagram(PreDiagram::from_classes(k, class_list(k, args)?)?)?,
    };
    if let Some(dir) = &cli.cache_dir {
        cache::store(dir, "diagram", &key, &to_canonical_string(&d.to_file())?)?;
    }
    Ok(d)
}

fn text_summary(pre: &PreDiagram, d: Option<&Diagram>) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "classes {}", pre.len());
    for i in 0..pre.len() {
        let rows = pre.class(i).to_i64_rows().unwrap_or_default();
        let _ = writeln!(s, "  {i} {rows:?}");
    }
    let _ = writeln!(s, "edges {}", pre.edges().len());
    for e in pre.edges() {
        let _ = writeln!(s, "  {} {} color {}", e.a, e.b, e.color + 1);
    }
    if let Some(d) = d {
        let _ = writeln!(s, "squares {}", d.squares().len());
        for sq in d.squares() {
            let _ = writeln!(s, "  {:?} colors {} {}", sq.corners, sq.v + 1, sq.w + 1);
        }
    }
    s
}

/// The pre-diagram, taken from the cached diagram when a cache is in use.
fn prediagram(cli: &Cli, k: &SimplicialComplex, args: &RingArgs) -> Result<PreDiagram> {
    if cli.cache_dir.is_some() {
        return Ok(diagram(cli, k, args)?.prediagram().clone());
    }
    PreDiagram::from_classes(k, class_list(k, args)?)
}

fn puzzles(cli: &Cli, cmd: &PuzzlesCommand) -> Result<String> {
    match cmd {
        PuzzlesCommand::Count {
            complex,
            j,
            ring,
            histogram,
        } => {
            let k = read_complex(complex)?;
            let j = parse_j(j)?;
            j.check_len(k.m())?;
            let e = enumerate_realizable(&prediagram(cli, &k, ring)?, &j)?;
            let mut s = format!("{}\n", e.count());
            if *histogram {
                for (c, n) in e.per_center.iter().enumerate() {
                    let _ = writeln!(s, "center {c} {n}");
                }
            }
            Ok(s)
        }
        PuzzlesCommand::List { complex, j, ring } => {
            let k = read_complex(complex)?;
            let j = parse_j(j)?;
            j.check_len(k.m())?;
            let e = enumerate_realizable(&prediagram(cli, &k, ring)?, &j)?;
            let list: Vec<_> = e.puzzles.iter().map(|p| p.to_file()).collect();
            to_canonical_string(&json!({"count": list.len(), "puzzles": list}))
        }
    }
}

fn crosscheck(
    cli: &Cli,
    k: &SimplicialComplex,
    j: &WedgeVector,
    squares: bool,
    limit: usize,
) -> Result<String> {
    j.check_len(k.m())?;
    let args = RingArgs {
        ring: RingArg::Z2,
        bound: 1,
        classes: None,
    };
    let mut s = String::new();
    let d = if squares {
        Some(diagram(cli, k, &args)?)
    } else {
        None
    };
    let pre = match &d {
        Some(d) => d.prediagram().clone(),
        None => prediagram(cli, k, &args)?,
    };
    let count = enumerate_realizable(&pre, j)?.count();
    if j.total() > limit {
        let _ = writeln!(
            s,
            "bijection SKIPPED sum(J) = {} > {limit}; puzzles = {count}",
            j.total()
        );
    } else {
        let direct = enumerate_z2(&k.expand(j)?)?.len();
        if count != direct {
            return Err(Error::InvariantViolation(format!(
                "bijection FAIL puzzles = {count}, classes over K(J) = {direct}"
            )));
        }
        let _ = writeln!(s, "bijection PASS {count} = {direct}");
    }
    if let Some(d) = d {
        let ctx = WedgeContext::new(k, j)?;
        let cands = candidates(&pre, j)?;
        let mut accepted = 0usize;
        for cand in &cands {
            let direct = realize_candidate(&ctx, &pre, cand)?.map(|(_, p)| p);
            let by_squares = complete_by_squares(&d, j, cand)?;
            if direct != by_squares {
                return Err(Error::InvariantViolation(format!(
                    "squares FAIL on candidate {cand:?}: direct {direct:?}, squares {by_squares:?}"
                )));
            }
            accepted += usize::from(direct.is_some());
        }
        let _ = writeln!(
            s,
            "squares PASS {} candidates, {accepted} realizable",
            cands.len()
        );
    }
    Ok(s)
}
