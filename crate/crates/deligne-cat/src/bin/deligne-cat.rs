//! Thin batch CLI over the library: every subcommand parses arguments,
//! delegates to library calls, and prints a versioned JSON/CSV/pretty report.
//!
//! Exit codes: 0 success, 2 invalid parameters, 3 prediction/measurement
//! disagreement, 4 memory budget exceeded.

use clap::{Args, Parser, Subcommand};
use serde_json::json;
use std::path::PathBuf;
use std::process::ExitCode;

use deligne_cat::algebra::{
    annihilated_by_cups_caps, is_quasi_idempotent, jones_wenzl, negligible_dim, scalar_string,
    tensor_ideal_truncation, two_sided_ideal, AlgebraParams, Morphism,
};
use deligne_cat::cache::Cache;
use deligne_cat::classifier::{
    critical_rank, in_ideal, kernel_dim_at_threshold, lambda_set, nu, params, Family, ObjectLabel,
};
use deligne_cat::diagram::{enumerate_diagrams, Color, Flavor, Row, Shape};
use deligne_cat::oracle::{kernel_generator, periplectic_structure_constants, phi_rank, RepSpec};
use deligne_cat::partition::{ab_dual, is_ab_dual, lr_coefficient, Bipartition, Partition};
use deligne_cat::report::{render, report, Format, SftRow};
use deligne_cat::{Error, Result};

#[derive(Parser)]
#[command(name = "deligne-cat", version, about = "Exact diagram calculus and tensor-ideal classification for interpolating categories")]
struct Cli {
    /// Directory for the on-disk result cache.
    #[arg(long, global = true)]
    cache_dir: Option<PathBuf>,
    /// Output format: json, csv or pretty.
    #[arg(long, global = true, default_value = "json")]
    format: String,
    /// Memory budget for oracle matrices, in MiB; refuse rather than thrash.
    #[arg(long, global = true, default_value_t = 4096)]
    budget_mb: u64,
    /// Worker threads for independent oracle jobs.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Cmd,
}

/// Flavor selector plus the numeric parameter it needs.
#[derive(Args, Clone)]
struct FamilyArgs {
    /// Family: O, GL, P, S or SL2.
    #[arg(long)]
    flavor: String,
    /// Interpolation parameter δ (O and GL).
    #[arg(long, allow_negative_numbers = true)]
    delta: Option<i64>,
    /// Symmetric-group parameter t (S).
    #[arg(long)]
    t: Option<u64>,
    /// Characteristic p (SL2).
    #[arg(long)]
    p: Option<u64>,
}

impl FamilyArgs {
    fn family(&self) -> Result<Family> {
        let need_delta = || {
            self.delta
                .ok_or_else(|| Error::InvalidParameter("--delta is required".into()))
        };
        match self.flavor.as_str() {
            "O" => Ok(Family::O { delta: need_delta()? }),
            "GL" => Ok(Family::GL { delta: need_delta()? }),
            "P" => Ok(Family::P),
            "S" => Ok(Family::S {
                t: self.t.ok_or_else(|| Error::InvalidParameter("--t is required".into()))?,
            }),
            "SL2" => Ok(Family::SL2 {
                p: self.p.ok_or_else(|| Error::InvalidParameter("--p is required".into()))?,
            }),
            other => Err(Error::InvalidParameter(format!(
                "unknown flavor {other:?} (expected O, GL, P, S or SL2)"
            ))),
        }
    }
}

/// Concrete representation dims for the oracle-facing commands.
#[derive(Args, Clone)]
struct SpecArgs {
    /// Spec flavor: O, GL, P or S.
    #[arg(long)]
    flavor: String,
    /// Even dimension m (O: k^{m|2n}; GL: k^{m|n}).
    #[arg(long)]
    m: Option<usize>,
    /// Odd parameter n (O: 2n odd dims; GL: n odd dims).
    #[arg(long)]
    n: Option<usize>,
    /// Periplectic parameter n (space k^{n|n}).
    #[arg(long)]
    pe_n: Option<usize>,
    /// Permutation-module parameter t.
    #[arg(long)]
    t: Option<usize>,
}

impl SpecArgs {
    fn spec(&self) -> Result<RepSpec> {
        let need = |v: Option<usize>, flag: &str| {
            v.ok_or_else(|| Error::InvalidParameter(format!("--{flag} is required")))
        };
        match self.flavor.as_str() {
            "O" => Ok(RepSpec::O {
                m: need(self.m, "m")?,
                n: need(self.n, "n")?,
            }),
            "GL" => Ok(RepSpec::GL {
                m: need(self.m, "m")?,
                n: need(self.n, "n")?,
            }),
            "P" => Ok(RepSpec::P { n: need(self.pe_n, "pe-n")? }),
            "S" => Ok(RepSpec::S { t: need(self.t, "t")? }),
            other => Err(Error::InvalidParameter(format!(
                "unknown spec flavor {other:?} (expected O, GL, P or S)"
            ))),
        }
    }
}

#[derive(Subcommand)]
enum Cmd {
    /// Parameter triple (m_j, n_j, r_j) of the j-th ideal.
    Params {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long)]
        j: usize,
    },
    /// The rectangle label ν^(j) generating the j-th ideal.
    Nu {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long)]
        j: usize,
    },
    /// Ideal-membership predicate for a label.
    IdealCheck {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long)]
        j: usize,
        /// Partition label, e.g. 4,4 (O/P; black component for GL).
        #[arg(long)]
        lambda: Option<String>,
        /// White component for GL labels.
        #[arg(long)]
        white: Option<String>,
        /// Weight label for SL2.
        #[arg(long)]
        weight: Option<u64>,
    },
    /// The boundary generator set Λ_j.
    LambdaSet {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long)]
        j: usize,
    },
    /// Littlewood-Richardson coefficient c^ν_{λμ}.
    Lr {
        #[arg(long)]
        lambda: Option<String>,
        #[arg(long)]
        mu: Option<String>,
        #[arg(long)]
        nu: Option<String>,
    },
    /// a×b-dual of a partition (and the duality test when --mu is given).
    Dual {
        #[arg(long)]
        lambda: Option<String>,
        #[arg(long)]
        mu: Option<String>,
        #[arg(long)]
        a: usize,
        #[arg(long)]
        b: usize,
    },
    /// Rank/kernel comparison of the map φ against the classifier over a rank range.
    Sft {
        #[command(flatten)]
        spec: SpecArgs,
        /// Inclusive rank range, e.g. 1..4 (total degree k+l for GL).
        #[arg(long)]
        r: Option<String>,
        /// Alias for --r in the symmetric-group case.
        #[arg(long)]
        k: Option<String>,
    },
    /// Single generator of the kernel ideal and its truncation check.
    Generator {
        /// O (orthosymplectic specs) or TL (Temperley-Lieb at δ).
        #[arg(long)]
        flavor: String,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long)]
        n: Option<usize>,
        /// Truncation rank (defaults to the critical rank + 1).
        #[arg(long)]
        r: Option<usize>,
        /// Loop parameter for TL.
        #[arg(long, allow_negative_numbers = true)]
        delta: Option<i64>,
        /// Jones-Wenzl index l for TL (f lives in TL_{l−1}).
        #[arg(long, default_value_t = 3)]
        l: usize,
    },
    /// Gram-radical (negligible) dimensions, optionally checked against the oracle.
    Negligible {
        /// Diagram flavor: Brauer, TemperleyLieb or PartitionCat.
        #[arg(long)]
        flavor: String,
        #[arg(long, allow_negative_numbers = true)]
        delta: Option<i64>,
        /// Inclusive rank range for the endomorphism shapes (r,r).
        #[arg(long)]
        r: String,
        /// Oracle dims for the comparison (O spec for Brauer/TL).
        #[arg(long)]
        m: Option<usize>,
        #[arg(long)]
        n: Option<usize>,
        /// Oracle parameter t (PartitionCat).
        #[arg(long)]
        t: Option<usize>,
    },
    /// Jones-Wenzl element of TL_{l−1}(δ).
    Jw {
        #[arg(long)]
        l: usize,
        #[arg(long, allow_negative_numbers = true)]
        delta: i64,
    },
    /// Rank and kernel dimension of φ at a single point.
    OracleRank {
        #[command(flatten)]
        spec: SpecArgs,
        #[arg(long)]
        r: Option<usize>,
        /// Mixed signature for GL.
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        l: Option<usize>,
    },
    /// Combined classifier summary for one (flavor, j).
    Report {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long)]
        j: usize,
    },
}

fn parse_partition(s: Option<&str>) -> Result<Partition> {
    match s {
        None | Some("") => Ok(Partition::empty()),
        Some(text) => {
            let parts = text
                .split(',')
                .map(|p| {
                    p.trim()
                        .parse::<usize>()
                        .map_err(|_| Error::InvalidParameter(format!("bad partition part {p:?}")))
                })
                .collect::<Result<Vec<_>>>()?;
            Partition::new(parts)
        }
    }
}

/// Inclusive range "a..b" (or a single "a").
fn parse_range(s: &str) -> Result<(usize, usize)> {
    if let Some((a, b)) = s.split_once("..") {
        let lo = a.parse().map_err(|_| Error::InvalidParameter(format!("bad range {s:?}")))?;
        let hi = b.parse().map_err(|_| Error::InvalidParameter(format!("bad range {s:?}")))?;
        if lo > hi {
            return Err(Error::InvalidParameter(format!("empty range {s:?}")));
        }
        Ok((lo, hi))
    } else {
        let v = s.parse().map_err(|_| Error::InvalidParameter(format!("bad range {s:?}")))?;
        Ok((v, v))
    }
}

fn row_json(row: &Row) -> serde_json::Value {
    match row {
        Row::Plain(n) => json!(n),
        Row::Colored(v) => json!(v
            .iter()
            .map(|c| if *c == Color::Black { 1 } else { -1 })
            .collect::<Vec<i8>>()),
    }
}

/// Endomorphism shape of total degree r for a spec (signature split for GL).
fn endo_shape(spec: &RepSpec, r: usize, split: Option<(usize, usize)>) -> Shape {
    match spec {
        RepSpec::GL { .. } => {
            let (k, l) = split.unwrap_or((r, 0));
            Shape {
                source: Row::signature(k, l),
                target: Row::signature(k, l),
            }
        }
        _ => Shape::plain(r, r),
    }
}

/// Rank of φ with disk caching; returns (algebra dimension, rank).
fn cached_rank(
    cache: &Cache,
    spec: &RepSpec,
    shape: &Shape,
    budget_mb: Option<u64>,
) -> Result<(usize, usize)> {
    let key = json!({
        "spec": spec,
        "source": row_json(&shape.source),
        "target": row_json(&shape.target),
    });
    if let Some((dim, rank)) = cache.get::<_, (usize, usize)>("phi-rank", &key) {
        return Ok((dim, rank));
    }
    let dim = enumerate_diagrams(spec.flavor(), shape)?.len();
    let rank = phi_rank(spec, shape, budget_mb)?;
    cache.put("phi-rank", &key, &(dim, rank))?;
    Ok((dim, rank))
}

fn label_json(label: &ObjectLabel) -> serde_json::Value {
    serde_json::to_value(label).expect("label serialization")
}

fn sft_points(spec: &RepSpec, lo: usize, hi: usize) -> Vec<(usize, Option<(usize, usize)>)> {
    let mut points = Vec::new();
    for r in lo..=hi {
        match spec {
            RepSpec::GL { .. } => {
                for k in 0..=r {
                    points.push((r, Some((k, r - k))));
                }
            }
            _ => points.push((r, None)),
        }
    }
    points
}

fn run_sft(cache: &Cache, spec: &RepSpec, lo: usize, hi: usize, budget: u64) -> Result<(Vec<SftRow>, bool)> {
    let rc = critical_rank(spec);
    let mut rows = Vec::new();
    let mut all_agree = true;
    for (r, split) in sft_points(spec, lo, hi) {
        let shape = endo_shape(spec, r, split);
        let (algebra_dim, rank) = cached_rank(cache, spec, &shape, Some(budget))?;
        let kernel = (algebra_dim - rank) as u128;
        let predicted_iso = r < rc;
        let predicted_kernel = if r == rc {
            Some(kernel_dim_at_threshold(spec, split)?)
        } else {
            None
        };
        let agree = match r.cmp(&rc) {
            std::cmp::Ordering::Less => kernel == 0,
            std::cmp::Ordering::Equal => Some(kernel) == predicted_kernel,
            std::cmp::Ordering::Greater => kernel > 0,
        };
        all_agree &= agree;
        rows.push(SftRow {
            r,
            split,
            algebra_dim: algebra_dim as u128,
            phi_rank: rank as u128,
            kernel_dim: kernel,
            predicted_iso,
            predicted_kernel_at_threshold: predicted_kernel,
            agree,
        });
    }
    Ok((rows, all_agree))
}

fn family_body(args: &FamilyArgs) -> serde_json::Value {
    let mut body = json!({"flavor": args.flavor});
    if let Some(d) = args.delta {
        body["delta"] = json!(d);
    }
    if let Some(t) = args.t {
        body["t"] = json!(t);
    }
    if let Some(p) = args.p {
        body["p"] = json!(p);
    }
    body
}

fn merge(mut base: serde_json::Value, extra: serde_json::Value) -> serde_json::Value {
    if let (Some(b), serde_json::Value::Object(e)) = (base.as_object_mut(), extra) {
        for (k, v) in e {
            b.insert(k, v);
        }
    }
    base
}

fn morphism_terms_json(f: &Morphism) -> serde_json::Value {
    json!(f
        .terms()
        .map(|(d, c)| json!({"diagram": d.to_string(), "coeff": scalar_string(c)}))
        .collect::<Vec<_>>())
}

/// Runs one command; returns the report and the exit code.
fn run(cli: &Cli) -> Result<(serde_json::Value, u8)> {
    let cache = Cache::new(cli.cache_dir.clone());
    let budget = cli.budget_mb;
    match &cli.command {
        Cmd::Params { family, j } => {
            let t = params(family.family()?, *j)?;
            Ok((
                report("params", merge(family_body(family), json!({"j": j, "m": t.m, "n": t.n, "r": t.r}))),
                0,
            ))
        }
        Cmd::Nu { family, j } => {
            let label = nu(family.family()?, *j)?;
            Ok((
                report("nu", merge(family_body(family), json!({"j": j, "nu": label_json(&label)}))),
                0,
            ))
        }
        Cmd::IdealCheck { family, j, lambda, white, weight } => {
            let fam = family.family()?;
            let label = match (&fam, weight) {
                (Family::SL2 { .. }, Some(w)) => ObjectLabel::Weight(*w),
                (Family::SL2 { .. }, None) => {
                    return Err(Error::InvalidParameter("SL2 labels need --weight".into()))
                }
                (Family::GL { .. }, _) => ObjectLabel::Pair(Bipartition::new(
                    parse_partition(lambda.as_deref())?,
                    parse_partition(white.as_deref())?,
                )),
                _ => ObjectLabel::Single(parse_partition(lambda.as_deref())?),
            };
            let result = in_ideal(fam, *j, &label)?;
            Ok((
                report(
                    "ideal-check",
                    merge(
                        family_body(family),
                        json!({"j": j, "label": label_json(&label), "in_ideal": result}),
                    ),
                ),
                0,
            ))
        }
        Cmd::LambdaSet { family, j } => {
            let set = lambda_set(family.family()?, *j)?;
            Ok((
                report(
                    "lambda-set",
                    merge(
                        family_body(family),
                        json!({"j": j, "lambda_set": set.iter().map(label_json).collect::<Vec<_>>()}),
                    ),
                ),
                0,
            ))
        }
        Cmd::Lr { lambda, mu, nu } => {
            let (l, m, n) = (
                parse_partition(lambda.as_deref())?,
                parse_partition(mu.as_deref())?,
                parse_partition(nu.as_deref())?,
            );
            let c = lr_coefficient(&l, &m, &n);
            Ok((
                report("lr", json!({"lambda": l, "mu": m, "nu": n, "lr": c})),
                0,
            ))
        }
        Cmd::Dual { lambda, mu, a, b } => {
            let l = parse_partition(lambda.as_deref())?;
            let d = ab_dual(&l, *a, *b)?;
            let mut body = json!({"lambda": l, "a": a, "b": b, "dual": d});
            if mu.is_some() {
                let m = parse_partition(mu.as_deref())?;
                body["mu"] = json!(m);
                body["is_dual"] = json!(is_ab_dual(&l, &m, *a, *b));
            }
            Ok((report("dual", body), 0))
        }
        Cmd::Sft { spec, r, k } => {
            let spec = spec.spec()?;
            let range = r.as_deref().or(k.as_deref()).ok_or_else(|| {
                Error::InvalidParameter("a rank range --r (or --k) is required".into())
            })?;
            let (lo, hi) = parse_range(range)?;
            let (rows, all_agree) = run_sft(&cache, &spec, lo, hi, budget)?;
            let body = json!({
                "spec": spec,
                "critical_rank": critical_rank(&spec),
                "provenance": {"critical_rank": "paper-threshold", "predicted_kernel_at_threshold": "derived", "phi_rank": "oracle"},
                "rows": rows,
                "agree": all_agree,
            });
            Ok((report("sft", body), if all_agree { 0 } else { 3 }))
        }
        Cmd::Generator { flavor, m, n, r, delta, l } => match flavor.as_str() {
            "TL" => {
                let delta = delta
                    .ok_or_else(|| Error::InvalidParameter("--delta is required for TL".into()))?;
                let f = jones_wenzl(*l, delta)?;
                let annihilated = annihilated_by_cups_caps(&f)?;
                let (quasi, alpha) = is_quasi_idempotent(&f)?;
                let mut rows = Vec::new();
                let mut all_agree = true;
                for nn in *l..=*l + 1 {
                    let params = AlgebraParams::new(Flavor::TemperleyLieb, delta);
                    let big = f.tensor_identity(Row::Plain(nn - (*l - 1)))?;
                    let closure = two_sided_ideal(params, &Shape::plain(nn, nn), &[big], None)?;
                    let radical = negligible_dim(params, &Shape::plain(nn, nn))?;
                    let agree = closure.dim() == radical;
                    all_agree &= agree;
                    rows.push(json!({"n": nn, "closure_dim": closure.dim(), "radical_dim": radical, "agree": agree}));
                }
                let body = json!({
                    "flavor": "TL", "delta": delta, "l": l,
                    "f": morphism_terms_json(&f),
                    "alpha": scalar_string(&alpha),
                    "quasi_idempotent": quasi,
                    "annihilated_by_cups_caps": annihilated,
                    "provenance": {"f": "derived", "closure_dim": "derived", "radical_dim": "oracle"},
                    "rows": rows,
                    "agree": all_agree && quasi && annihilated,
                });
                let ok = all_agree && quasi && annihilated;
                Ok((report("generator", body), if ok { 0 } else { 3 }))
            }
            "O" => {
                let spec = RepSpec::O {
                    m: m.ok_or_else(|| Error::InvalidParameter("--m is required".into()))?,
                    n: n.ok_or_else(|| Error::InvalidParameter("--n is required".into()))?,
                };
                let rc = critical_rank(&spec);
                let rr = r.unwrap_or(rc + 1);
                if rr < rc {
                    return Err(Error::InvalidParameter(format!(
                        "truncation rank {rr} is below the critical rank {rc}"
                    )));
                }
                let f = kernel_generator(&spec, &Shape::plain(rc, rc), Some(budget))?;
                let annihilated = annihilated_by_cups_caps(&f)?;
                let (quasi, alpha) = is_quasi_idempotent(&f)?;
                let truncation = tensor_ideal_truncation(&f, rr)?;
                let (algebra_dim, rank) =
                    cached_rank(&cache, &spec, &Shape::plain(rr, rr), Some(budget))?;
                let kernel = algebra_dim - rank;
                let agree = truncation.dim() == kernel;
                let body = json!({
                    "spec": spec,
                    "critical_rank": rc,
                    "r": rr,
                    "generator_terms": f.num_terms(),
                    "annihilated_by_cups_caps": annihilated,
                    "quasi_idempotent": quasi,
                    "alpha": scalar_string(&alpha),
                    "truncation_dim": truncation.dim(),
                    "kernel_dim": kernel,
                    "provenance": {"critical_rank": "paper-threshold", "truncation_dim": "derived", "kernel_dim": "oracle"},
                    "agree": agree,
                });
                Ok((report("generator", body), if agree { 0 } else { 3 }))
            }
            other => Err(Error::InvalidParameter(format!(
                "unknown generator flavor {other:?} (expected O or TL)"
            ))),
        },
        Cmd::Negligible { flavor, delta, r, m, n, t } => {
            let (flavor, delta) = match flavor.as_str() {
                "Brauer" => (Flavor::Brauer, delta.ok_or_else(|| Error::InvalidParameter("--delta is required".into()))?),
                "TemperleyLieb" | "TL" => (Flavor::TemperleyLieb, delta.ok_or_else(|| Error::InvalidParameter("--delta is required".into()))?),
                "PartitionCat" => (
                    Flavor::PartitionCat,
                    t.map(|t| t as i64)
                        .or(*delta)
                        .ok_or_else(|| Error::InvalidParameter("--t is required".into()))?,
                ),
                "Periplectic" => {
                    return Err(Error::Unsupported(
                        "the periplectic flavor has no Markov trace; its kernels go through the oracle".into(),
                    ))
                }
                other => return Err(Error::InvalidParameter(format!("unknown flavor {other:?}"))),
            };
            let params = AlgebraParams::new(flavor, delta);
            let spec = match flavor {
                Flavor::PartitionCat => Some(RepSpec::S { t: delta as usize }),
                _ => match (m, n) {
                    (Some(m), Some(n)) => Some(RepSpec::O { m: *m, n: *n }),
                    _ => None,
                },
            };
            let (lo, hi) = parse_range(r)?;
            let mut rows = Vec::new();
            let mut all_agree = true;
            for rr in lo..=hi {
                let shape = Shape::plain(rr, rr);
                let radical = negligible_dim(params, &shape)?;
                let mut row = json!({"r": rr, "radical_dim": radical});
                if let Some(spec) = &spec {
                    let (dim, rank) = cached_rank(&cache, spec, &shape, Some(budget))?;
                    let agree = radical == dim - rank;
                    all_agree &= agree;
                    row["kernel_dim"] = json!(dim - rank);
                    row["agree"] = json!(agree);
                }
                rows.push(row);
            }
            let body = json!({
                "flavor": format!("{flavor:?}"),
                "delta": delta,
                "provenance": {"radical_dim": "derived", "kernel_dim": "oracle"},
                "rows": rows,
                "agree": all_agree,
            });
            Ok((report("negligible", body), if all_agree { 0 } else { 3 }))
        }
        Cmd::Jw { l, delta } => {
            let f = jones_wenzl(*l, *delta)?;
            let (quasi, alpha) = is_quasi_idempotent(&f)?;
            let body = json!({
                "l": l,
                "delta": delta,
                "f": morphism_terms_json(&f),
                "quasi_idempotent": quasi,
                "alpha": scalar_string(&alpha),
                "annihilated_by_cups_caps": annihilated_by_cups_caps(&f)?,
            });
            Ok((report("jw", body), 0))
        }
        Cmd::OracleRank { spec, r, k, l } => {
            let spec = spec.spec()?;
            let (rank_r, split) = match (&spec, r, k, l) {
                (RepSpec::GL { .. }, _, Some(k), Some(l)) => (k + l, Some((*k, *l))),
                (_, Some(r), _, _) => (*r, None),
                _ => {
                    return Err(Error::InvalidParameter(
                        "a rank --r (or --k/--l for GL) is required".into(),
                    ))
                }
            };
            let shape = endo_shape(&spec, rank_r, split);
            let (dim, rank) = cached_rank(&cache, &spec, &shape, Some(budget))?;
            // periplectic structure constants double as the cached product table
            if let RepSpec::P { n } = spec {
                if rank_r < critical_rank(&spec)
                    && cache.get::<_, usize>("peri-table-rank", &json!({"r": rank_r, "n": n})).is_none()
                {
                    let table = periplectic_structure_constants(rank_r, n)?;
                    cache.put("peri-table", &json!({"r": rank_r, "n": n}), &table)?;
                    cache.put("peri-table-rank", &json!({"r": rank_r, "n": n}), &rank_r)?;
                }
            }
            let body = json!({
                "spec": spec,
                "r": rank_r,
                "split": split,
                "algebra_dim": dim,
                "phi_rank": rank,
                "kernel_dim": dim - rank,
                "provenance": {"phi_rank": "oracle"},
            });
            Ok((report("oracle-rank", body), 0))
        }
        Cmd::Report { family, j } => {
            let fam = family.family()?;
            let label = nu(fam, *j)?;
            let set = lambda_set(fam, *j)?;
            let mut body = merge(
                family_body(family),
                json!({
                    "j": j,
                    "nu": label_json(&label),
                    "lambda_set": set.iter().map(label_json).collect::<Vec<_>>(),
                    "provenance": {"params": "derived", "nu": "derived", "lambda_set": "derived"},
                }),
            );
            if let Ok(t) = params(fam, *j) {
                body = merge(body, json!({"m": t.m, "n": t.n, "r": t.r}));
            }
            Ok((report("report", body), 0))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global();
    }
    let format: Format = match cli.format.parse() {
        Ok(f) => f,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    match run(&cli) {
        Ok((report, code)) => {
            print!("{}", render(&report, format));
            ExitCode::from(code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            let code = match e {
                Error::BudgetExceeded(_) => 4,
                _ => 2,
            };
            ExitCode::from(code)
        }
    }
}
