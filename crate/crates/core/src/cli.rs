// SPDX-License-Identifier: Apache-2.0

//! The `hompoly` command line.
//!
//! Every command writes deterministic, tab-separated output; comment lines
//! start with `#`.

use std::fmt::Write as _;
use std::fs;
use std::ops::RangeInclusive;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use crate::classify::{classify_all, Classification};
use crate::coincidence::{build_generic_matrix, certify_nonvanishing, enumerate_graphs, reject_reason};
use crate::constructions::{
    bipyramid, cross_polytope, cube, dual, join, product, regular_polygon, simplex, tensor, RegularPolygonSpec,
};
use crate::error::{Error, Result};
use crate::hom::{build_hom_with, hom_identity_check, parse_labels, write_labels, HomOptions, HomPolytope, IdentityKind};
use crate::linalg::{parse_decimal, Scalar};
use crate::polytope::{parse_polytope, write_hrep, write_vrep, HRep, Polytope, PolytopeFile};
use crate::regular::table;

#[derive(Debug, Parser)]
#[command(name = "hompoly", version, about = "Exact hom-polytopes of affine maps between polytopes")]
pub struct Cli {
    /// Check internal invariants and abort naming the first one violated.
    #[arg(long, global = true)]
    pub assert: bool,

    /// Write output here instead of standard output.
    #[arg(short, long, global = true)]
    pub out: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build a standard polytope or apply a construction to polytope files.
    Construct(ConstructArgs),
    /// Write Hom(P, Q) as an H-representation plus a label sidecar.
    Hom(HomArgs),
    /// Enumerate and classify the vertex maps of a hom-polytope.
    Classify(ClassifyArgs),
    /// Vertex counts of Hom(P_m, P_n) for rounded regular polygons.
    Table(TableArgs),
    /// The coincidence graphs with their determinant certificates.
    Graphs(GraphsArgs),
    /// Compare f-vectors on both sides of a hom identity.
    IdentityCheck(IdentityArgs),
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum Kind {
    Simplex,
    Cube,
    #[value(alias = "cross_polytope", alias = "cross-polytope")]
    Crosspolytope,
    #[value(alias = "regular_ngon")]
    RegularNgon,
    Join,
    Product,
    Tensor,
    Dual,
    Bipyramid,
}

#[derive(Debug, Args)]
pub struct ConstructArgs {
    pub kind: Kind,
    /// Dimension or polygon size for standard polytopes; input files for
    /// constructions.
    pub inputs: Vec<String>,
    #[arg(long, default_value_t = RegularPolygonSpec::DEFAULT_DIGITS)]
    pub digits: u32,
    /// Emit the H-representation instead of the vertices.
    #[arg(long)]
    pub hrep: bool,
}

#[derive(Debug, Args)]
pub struct HomArgs {
    pub source: PathBuf,
    pub target: PathBuf,
    /// Label sidecar path; defaults to the output path with `.labels`
    /// appended. The labels are also embedded in the output as comments.
    #[arg(long)]
    pub labels: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct ClassifyArgs {
    /// Hom H-representation written by `hom`, or the source polytope when a
    /// second file is given.
    pub first: PathBuf,
    /// Target polytope; switches to the two-polytope form.
    pub second: Option<PathBuf>,
    /// Label sidecar for the hom form; defaults to `<first>.labels`, then to
    /// the labels embedded in the hom file.
    #[arg(long)]
    pub labels: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    #[arg(long, default_value = "3..8")]
    pub m_range: String,
    #[arg(long, default_value = "3..8")]
    pub n_range: String,
    #[arg(long, default_value_t = RegularPolygonSpec::DEFAULT_DIGITS)]
    pub digits: u32,
    /// Comma-separated thresholds that must all induce the same partition.
    #[arg(long, default_value = "1e-3,1e-4")]
    pub eps: String,
    #[arg(long, default_value_t = 1)]
    pub jobs: usize,
}

#[derive(Debug, Args)]
pub struct GraphsArgs {
    /// Also expand each determinant symbolically and cross-check the value.
    #[arg(long)]
    pub symbolic: bool,
    #[arg(long, default_value_t = 1)]
    pub jobs: usize,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum Identity {
    #[value(alias = "simplex_power")]
    SimplexPower,
    #[value(alias = "cube_bipyramid")]
    CubeBipyramid,
    #[value(alias = "cube_cross_swap")]
    CubeCrossSwap,
}

#[derive(Debug, Args)]
pub struct IdentityArgs {
    pub identity: Identity,
    #[arg(long)]
    pub m: Option<usize>,
    #[arg(long)]
    pub n: Option<usize>,
    /// The polytope `P` of the identity, where it takes one.
    #[arg(long)]
    pub polytope: Option<PathBuf>,
}

/// How a successful run ended.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    Ok,
    /// The command ran but the property it checks does not hold.
    CheckFailed,
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::InvalidArgument(format!("{}: {e}", path.display())))
}

fn read_polytope(path: &Path) -> Result<Polytope> {
    let text = read(path)?;
    let parsed = parse_polytope(&text).map_err(|e| match e {
        Error::Parse { line, column, message } => Error::Parse {
            line,
            column,
            message: format!("{}: {message}", path.display()),
        },
        e => e,
    })?;
    match parsed {
        PolytopeFile::V(v) => Polytope::from_vrep(v),
        PolytopeFile::H(h) => Polytope::from_hrep(h),
    }
}

fn parse_count(s: &str, what: &str) -> Result<usize> {
    s.parse()
        .map_err(|_| Error::InvalidArgument(format!("{what} must be a nonnegative integer, got `{s}`")))
}

/// `a..b` and `a..=b` are both inclusive; a single number is a one-row range.
pub fn parse_range(s: &str) -> Result<RangeInclusive<usize>> {
    let (lo, hi) = match s.split_once("..") {
        Some((lo, hi)) => (lo, hi.trim_start_matches('=')),
        None => (s, s),
    };
    let (lo, hi) = (parse_count(lo.trim(), "range start")?, parse_count(hi.trim(), "range end")?);
    if lo > hi {
        return Err(Error::InvalidArgument(format!("empty range `{s}`")));
    }
    Ok(lo..=hi)
}

pub fn parse_eps_list(s: &str) -> Result<Vec<Scalar>> {
    let list: Vec<Scalar> = s
        .split(',')
        .map(|t| {
            let v = parse_decimal(t.trim()).ok_or_else(|| Error::InvalidArgument(format!("invalid epsilon `{t}`")))?;
            if v <= Scalar::from_integer(0.into()) {
                return Err(Error::InvalidArgument(format!("epsilon must be positive, got `{t}`")));
            }
            Ok(v)
        })
        .collect::<Result<_>>()?;
    if list.is_empty() {
        return Err(Error::InvalidArgument("no epsilon given".into()));
    }
    Ok(list)
}

fn invariant(ok: bool, name: &str) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::Invariant(name.to_string()))
    }
}

/// Runs one command and returns its output text.
pub fn run(cli: &Cli) -> Result<(String, Outcome)> {
    match &cli.command {
        Command::Construct(a) => construct(a).map(|s| (s, Outcome::Ok)),
        Command::Hom(a) => hom(cli, a).map(|s| (s, Outcome::Ok)),
        Command::Classify(a) => classify(cli, a).map(|s| (s, Outcome::Ok)),
        Command::Table(a) => table_cmd(cli, a),
        Command::Graphs(a) => graphs(cli, a),
        Command::IdentityCheck(a) => identity(a),
    }
}

fn construct(a: &ConstructArgs) -> Result<String> {
    let arity = match a.kind {
        Kind::Join | Kind::Product | Kind::Tensor => 2,
        _ => 1,
    };
    if a.inputs.len() != arity {
        return Err(Error::InvalidArgument(format!(
            "{:?} takes {arity} argument(s), got {}",
            a.kind,
            a.inputs.len()
        )));
    }
    let size = || parse_count(&a.inputs[0], "size");
    let file = |i: usize| read_polytope(Path::new(&a.inputs[i]));
    let p = match a.kind {
        Kind::Simplex => simplex(size()?)?,
        Kind::Cube => cube(size()?)?,
        Kind::Crosspolytope => cross_polytope(size()?)?,
        Kind::RegularNgon => regular_polygon(RegularPolygonSpec::new(size()?, a.digits)?)?,
        Kind::Join => join(&file(0)?, &file(1)?)?,
        Kind::Product => product(&file(0)?, &file(1)?)?,
        Kind::Tensor => tensor(&file(0)?, &file(1)?)?,
        Kind::Dual => dual(&file(0)?)?,
        Kind::Bipyramid => bipyramid(&file(0)?)?,
    };
    if a.hrep {
        let p = p.irredundant()?;
        Ok(write_hrep(p.hrep().expect("irredundant has both")))
    } else {
        Ok(write_vrep(p.vrep().ok_or(Error::MissingRepresentation("V"))?))
    }
}

fn with_suffix(path: &Path, suffix: &str) -> PathBuf {
    let mut s = path.as_os_str().to_owned();
    s.push(suffix);
    PathBuf::from(s)
}

/// Prefix of sidecar data lines embedded in a hom H-representation.
const EMBED: &str = "#label ";

fn embed_labels(sidecar: &str) -> String {
    sidecar
        .lines()
        .map(|l| if l.starts_with('#') { format!("{l}\n") } else { format!("{EMBED}{l}\n") })
        .collect()
}

fn extract_labels(hom_text: &str) -> Option<String> {
    let mut out = String::new();
    for line in hom_text.lines() {
        if line.starts_with("# hom ") {
            out.push_str(line);
        } else if let Some(rest) = line.strip_prefix(EMBED) {
            out.push_str(rest);
        } else {
            continue;
        }
        out.push('\n');
    }
    (!out.is_empty()).then_some(out)
}

fn hom(cli: &Cli, a: &HomArgs) -> Result<String> {
    let p = read_polytope(&a.source)?;
    let q = read_polytope(&a.target)?;
    let h = build_hom_with(&p, &q, HomOptions {
        assert_irredundant: cli.assert,
    })?;
    let sidecar = write_labels(&h);
    let labels_path = a.labels.clone().or_else(|| cli.out.as_deref().map(|o| with_suffix(o, ".labels")));
    if let Some(path) = labels_path {
        fs::write(path, &sidecar)?;
    }
    Ok(format!("{}{}", embed_labels(&sidecar), write_hrep(h.hrep())))
}

fn load_hom(a: &ClassifyArgs) -> Result<HomPolytope> {
    if let Some(second) = &a.second {
        let p = read_polytope(&a.first)?;
        let q = read_polytope(second)?;
        return build_hom_with(&p, &q, HomOptions::default());
    }
    let text = read(&a.first)?;
    let hrep: HRep = match parse_polytope(&text)? {
        PolytopeFile::H(h) => h,
        PolytopeFile::V(_) => {
            return Err(Error::InvalidArgument(
                "classify expects a hom H-representation or two polytope files".into(),
            ))
        }
    };
    let default_path = with_suffix(&a.first, ".labels");
    let sidecar = match &a.labels {
        Some(path) => read(path)?,
        None if default_path.exists() => read(&default_path)?,
        None => extract_labels(&text).ok_or_else(|| {
            Error::InvalidArgument(format!(
                "no labels for {}: give --labels or keep the `.labels` sidecar next to it",
                a.first.display()
            ))
        })?,
    };
    let (dims, labels) = parse_labels(&sidecar)?;
    let (d, e) = dims.ok_or_else(|| Error::InvalidArgument("label sidecar lacks the `# hom` header".into()))?;
    HomPolytope::from_labeled_hrep(d, e, hrep, labels)
}

fn classify(cli: &Cli, a: &ClassifyArgs) -> Result<String> {
    let h = load_hom(a)?;
    let c = classify_all(&h)?;
    if cli.assert {
        check_classification(&h, &c)?;
    }
    let mut out = String::new();
    let _ = writeln!(
        out,
        "# index\tmap\trank\tvertex\tsimple\tactive\tsurjective\tdeflation\tface_collapse\tsurj_vertex\tinj_vertex\tlocations"
    );
    for (k, (v, r)) in c.vertices.iter().zip(&c.records).enumerate() {
        let locs: Vec<String> = r.image_vertex_locations.iter().map(ToString::to_string).collect();
        let _ = writeln!(
            out,
            "{k}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}",
            v.map,
            r.rank,
            r.is_vertex as u8,
            r.simple as u8,
            r.active_labels,
            r.surjective_onto_target as u8,
            r.is_deflation as u8,
            r.surj_factor_is_face_collapse as u8,
            r.surj_factor_is_vertex as u8,
            r.inj_factor_is_vertex as u8,
            locs.join(",")
        );
    }
    let s = &c.summary;
    let rank_heads: Vec<String> = (0..s.by_rank.len()).map(|r| format!("rank{r}")).collect();
    let rank_vals: Vec<String> = s.by_rank.iter().map(ToString::to_string).collect();
    let _ = writeln!(out, "# summary\t{}\ttotal\tsimple\tnon_simple", rank_heads.join("\t"));
    let _ = writeln!(
        out,
        "summary\t{}\t{}\t{}\t{}",
        rank_vals.join("\t"),
        s.total(),
        s.simple,
        s.total() - s.simple
    );
    Ok(out)
}

fn check_classification(h: &HomPolytope, c: &Classification) -> Result<()> {
    let nq = h.target().num_vertices().unwrap_or(0);
    invariant(c.summary.by_rank[0] == nq, "rank-0 vertices are the constant maps to vertices")?;
    for r in &c.records {
        invariant(r.is_vertex, "enumerated maps are vertices")?;
        invariant(r.active_labels >= h.dim(), "vertices are on at least dim facets")?;
        invariant(!r.is_deflation || r.surjective_onto_target, "deflations are surjective")?;
        invariant(r.surj_factor_is_vertex && r.inj_factor_is_vertex, "factors of vertex maps are vertices")?;
        invariant(
            !r.surj_factor_is_deflation || r.rank == h.source_dim() || r.surj_factor_is_face_collapse,
            "deflations are face-collapses",
        )?;
    }
    Ok(())
}

fn table_cmd(cli: &Cli, a: &TableArgs) -> Result<(String, Outcome)> {
    let m_range = parse_range(&a.m_range)?;
    let n_range = parse_range(&a.n_range)?;
    if *m_range.start() < 3 || *n_range.start() < 3 {
        return Err(Error::InvalidArgument("polygon sizes start at 3".into()));
    }
    let eps = parse_eps_list(&a.eps)?;
    RegularPolygonSpec::new(3, a.digits)?;
    let rows = table(m_range, n_range, a.digits, &eps, a.jobs)?;
    let eps_text: Vec<String> = eps.iter().map(ToString::to_string).collect();
    let mut out = String::new();
    let _ = writeln!(
        out,
        "# digits={} eps={} norm=euclidean clusters=connected-components",
        a.digits,
        eps_text.join(",")
    );
    let _ = writeln!(out, "m\tn\trank0\trank1\trank2\ttotal\tprovenance\tchecks");
    let mut outcome = Outcome::Ok;
    for r in &rows {
        let d = &r.diagnostics;
        let mut checks = Vec::new();
        if !d.divisibility_failures.is_empty() {
            checks.push("divisibility");
        }
        if !d.closed_form_mismatches.is_empty() {
            checks.push("closed_form");
        }
        if !d.mixed_rank_clusters.is_empty() {
            checks.push("mixed_rank");
        }
        if !d.pairwise_ok {
            checks.push("pairwise");
        }
        if !checks.is_empty() {
            outcome = Outcome::CheckFailed;
            if cli.assert {
                return Err(Error::Invariant(format!(
                    "row ({}, {}) failed: {}",
                    r.row.m,
                    r.row.n,
                    checks.join(",")
                )));
            }
        }
        let prov: Vec<String> = r.row.provenance.iter().map(ToString::to_string).collect();
        let _ = writeln!(
            out,
            "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}",
            r.row.m,
            r.row.n,
            r.row.ranks[0],
            r.row.ranks[1],
            r.row.ranks[2],
            r.row.total(),
            prov.join(","),
            if checks.is_empty() { "ok".to_string() } else { checks.join(",") }
        );
    }
    Ok((out, outcome))
}

fn graphs(cli: &Cli, a: &GraphsArgs) -> Result<(String, Outcome)> {
    let gs = enumerate_graphs();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(a.jobs.max(1))
        .build()
        .map_err(|e| Error::InvalidArgument(e.to_string()))?;
    let lines: Vec<String> = pool.install(|| {
        gs.par_iter()
            .map(|g| -> Result<String> {
                let form = g.canonical_form().expect("enumerated graphs are accepted");
                let cert = certify_nonvanishing(g)?;
                let point: Vec<String> = cert.point.iter().map(ToString::to_string).collect();
                let mut line = format!(
                    "{form}\t{g}\t{}\t{}\t{}\t{}",
                    reject_reason(g),
                    point.join(","),
                    cert.det_value,
                    cert.attempts
                );
                if a.symbolic || cli.assert {
                    let sym = build_generic_matrix(g).symbolic_determinant();
                    invariant(
                        sym.eval(&cert.point) == cert.det_value,
                        "symbolic and eliminated determinants agree",
                    )?;
                    if a.symbolic {
                        let _ = write!(line, "\t{}", sym.num_terms());
                    }
                }
                Ok(line)
            })
            .collect::<Result<Vec<_>>>()
    })?;
    let mut out = String::from("# graph\tedges\tverdict\tpoint\tdeterminant\tattempts");
    if a.symbolic {
        out.push_str("\tsymbolic_terms");
    }
    out.push('\n');
    for l in lines {
        out.push_str(&l);
        out.push('\n');
    }
    Ok((out, Outcome::Ok))
}

fn identity(a: &IdentityArgs) -> Result<(String, Outcome)> {
    let need = |v: Option<usize>, name: &str| v.ok_or_else(|| Error::InvalidArgument(format!("--{name} is required")));
    let polytope = || match &a.polytope {
        Some(p) => read_polytope(p),
        None => Err(Error::InvalidArgument("--polytope is required".into())),
    };
    let kind = match a.identity {
        Identity::SimplexPower => IdentityKind::SimplexPower {
            n: need(a.n, "n")?,
            target: polytope()?,
        },
        Identity::CubeBipyramid => IdentityKind::CubeBipyramid {
            source: polytope()?,
            n: need(a.n, "n")?,
        },
        Identity::CubeCrossSwap => IdentityKind::CubeCrossSwap {
            m: need(a.m, "m")?,
            n: need(a.n, "n")?,
        },
    };
    let report = hom_identity_check(&kind)?;
    let outcome = if report.holds() { Outcome::Ok } else { Outcome::CheckFailed };
    Ok((format!("{report}\n"), outcome))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges() {
        assert_eq!(parse_range("3..8").unwrap(), 3..=8);
        assert_eq!(parse_range("3..=8").unwrap(), 3..=8);
        assert_eq!(parse_range("5").unwrap(), 5..=5);
        assert!(parse_range("8..3").is_err());
        assert!(parse_range("a..3").is_err());
    }

    #[test]
    fn eps_lists() {
        let e = parse_eps_list("1e-3, 1e-4").unwrap();
        assert_eq!(e.len(), 2);
        assert_eq!(e[0], crate::linalg::ratio(1, 1000));
        assert!(parse_eps_list("0").is_err());
        assert!(parse_eps_list("x").is_err());
    }

    #[test]
    fn parses_commands() {
        let cli = Cli::try_parse_from(["hompoly", "table", "--m-range", "3..4", "--eps", "1e-3"]).unwrap();
        assert!(matches!(cli.command, Command::Table(_)));
        assert!(Cli::try_parse_from(["hompoly", "construct", "nonsense", "3"]).is_err());
    }
}
