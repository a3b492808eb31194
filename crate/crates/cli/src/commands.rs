// SPDX-License-Identifier: MIT
//! Subcommand bodies. Each returns the full text written to stdout.

use std::fmt::Write as _;

use anyhow::{anyhow, Result};
use grasscat_core::artube::{
    ar_sequence_end, ar_sequence_start, ar_split_rule, census_39, rigidity_check,
    tau_inverse_profile, tube_id, tube_walk, Direction,
};
use grasscat_core::configs::{poset_from_profile, profile_verdict, simplify};
use grasscat_core::enumeration::{
    count_three_box_rank2, enumerate_canonical_real, enumerate_imaginary_rank3,
    enumerate_three_box_rank2,
};
use grasscat_core::oracle::{Config, Field, Module};
use grasscat_core::profiles::{a_shift, collapse, meeting_points, quasi_boxes};
use grasscat_core::roots::{classify, profile_root, q, to_simple_coords, RootType, RootVector};
use grasscat_core::subsets::interlacing_degree;
use grasscat_core::Profile;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::input::{check_kn, parse_profile, parse_subset, parse_vector, usage, Kn};
use crate::{Cli, Command, EnumKind, Format, SplitSide};

const SCHEMA: &str = "grasscat/1";

fn envelope(command: &str, mut body: Value) -> String {
    let obj = body.as_object_mut().expect("object body");
    obj.insert("schema".into(), json!(SCHEMA));
    obj.insert("command".into(), json!(command));
    serde_json::to_string_pretty(&body).expect("serializable") + "\n"
}

fn root_type_name(t: RootType) -> &'static str {
    match t {
        RootType::RealRoot => "Real",
        RootType::ImaginaryRoot => "Imaginary",
        RootType::NotRoot => "NotRoot",
    }
}

fn kn_of(cli: &Cli) -> Result<Kn> {
    let kn = cli.global.kn.ok_or_else(|| usage("--kn k,n is required"))?;
    check_kn(kn, cli.global.allow_large_k)?;
    Ok(kn)
}

fn config(cli: &Cli, prime: u64) -> Config {
    Config { prime, seed: cli.global.seed[0], ..Config::default() }
}

fn dot_escape(p: &Profile) -> String {
    p.to_string().replace('"', "\\\"")
}

pub fn run(cli: &Cli) -> Result<String> {
    let g = &cli.global;
    let fmt = g.format.unwrap_or(match cli.command {
        Command::Census { .. } | Command::Enumerate { .. } => Format::Tsv,
        _ => Format::Json,
    });
    match &cli.command {
        Command::Root { profile, x } => {
            let kn = kn_of(cli)?;
            let (label, v) = match (profile, x) {
                (Some(p), _) => {
                    let p = parse_profile(p, kn)?;
                    (p.to_string(), RootVector::new(kn.k, p.multiplicity_vector())?)
                }
                (None, Some(x)) => {
                    let x = parse_vector(x)?;
                    if x.len() != kn.n {
                        return Err(usage(format!("vector has {} entries, expected {}", x.len(), kn.n)));
                    }
                    (String::new(), RootVector::new(kn.k, x)?)
                }
                (None, None) => return Err(usage("give --profile or --x")),
            };
            let (qv, t, c) = (q(&v), classify(&v)?, to_simple_coords(&v)?);
            if fmt == Format::Tsv {
                return Ok(format!("{label}\t{qv}\t{}\t{c}\n", root_type_name(t)));
            }
            Ok(envelope(
                "root",
                json!({
                    "k": kn.k, "n": kn.n, "profile": label, "x": v.x,
                    "q": qv.to_string(), "root_type": root_type_name(t),
                    "expansion": c.to_string(), "coords": { "beta": c.c_beta, "alpha": c.c },
                }),
            ))
        }
        Command::ClassifyProfile { profile } => {
            let kn = kn_of(cli)?;
            let p = parse_profile(profile, kn)?;
            if fmt == Format::Dot {
                let raw = poset_from_profile(&p)?;
                return Ok(raw.to_dot() + &simplify(&raw).to_dot());
            }
            let r = profile_root(&p)?;
            let rows = p.rows();
            let mut degrees = Vec::new();
            for a in 0..rows.len() {
                for b in a + 1..rows.len() {
                    degrees.push(json!({ "rows": [a + 1, b + 1], "degree": interlacing_degree(&rows[a], &rows[b])? }));
                }
            }
            let verdict = if p.rank() >= 2 { Some(profile_verdict(&p)?) } else { None };
            Ok(envelope(
                "classify-profile",
                json!({
                    "profile": p.to_string(), "rank": p.rank(),
                    "weakly_column_decreasing": p.is_weakly_column_decreasing(),
                    "canonical": p.is_canonical(), "interlacing": p.is_interlacing(),
                    "canonical_rotation": p.canonical_rotation().map(|c| c.to_string()),
                    "interlacing_degrees": degrees,
                    "x": r.x, "q": r.q.to_string(), "root_type": root_type_name(r.root_type),
                    "expansion": r.coords.to_string(), "configuration": verdict,
                }),
            ))
        }
        Command::Boxes { upper, lower } => {
            let kn = kn_of(cli)?;
            let (i, j) = (parse_subset(upper, kn)?, parse_subset(lower, kn)?);
            let boxes = quasi_boxes(&i, &j)?;
            let meets = meeting_points(&i, &j)?;
            if g.count_only {
                return Ok(format!("{}\n", boxes.len()));
            }
            if fmt == Format::Tsv {
                let mut s = String::from("start\tend\tsize\tcosize\tis_box\n");
                for b in &boxes {
                    let _ = writeln!(s, "{}\t{}\t{}\t{}\t{}", b.start, b.end, b.size, b.cosize, b.is_box);
                }
                return Ok(s);
            }
            Ok(envelope(
                "boxes",
                json!({
                    "upper": i.to_string(), "lower": j.to_string(),
                    "branching_points": meets, "quasi_boxes": boxes,
                    "count": boxes.len(), "boxes": boxes.iter().filter(|b| b.is_box).count(),
                }),
            ))
        }
        Command::Collapse { upper, lower } => {
            let kn = kn_of(cli)?;
            let (i, j) = (parse_subset(upper, kn)?, parse_subset(lower, kn)?);
            let c = collapse(&i, &j)?;
            Ok(envelope(
                "collapse",
                json!({
                    "k": c.upper.k(), "n": c.upper.n(),
                    "upper": c.upper, "lower": c.lower, "kept": c.kept,
                    "quasi_boxes": quasi_boxes(&c.upper, &c.lower)?.len(),
                }),
            ))
        }
        Command::Shift { profile, upper, lower, by } => {
            let kn = kn_of(cli)?;
            match (profile, upper, lower) {
                (Some(p), _, _) => {
                    let s = parse_profile(p, kn)?.shift(*by);
                    if fmt == Format::Tsv {
                        return Ok(format!("{s}\n"));
                    }
                    Ok(envelope("shift", json!({ "by": by, "profile": s, "text": s.to_string() })))
                }
                (None, Some(u), Some(l)) => {
                    let (i, j) = a_shift(&parse_subset(u, kn)?, &parse_subset(l, kn)?, *by)?;
                    Ok(envelope("shift", json!({ "by": by, "upper": i, "lower": j, "text": format!("{i}|{j}") })))
                }
                _ => Err(usage("give --profile or both --upper and --lower")),
            }
        }
        Command::Tau { profile } => {
            let kn = kn_of(cli)?;
            let p = parse_profile(profile, kn)?;
            let cfg = config(cli, g.prime);
            let step = tau_inverse_profile(&p, &cfg)?;
            if fmt == Format::Tsv {
                return Ok(format!("{}\t{}\n", step.input, step.profile));
            }
            Ok(envelope(
                "tau",
                json!({
                    "seed": cfg.seed, "prime": cfg.prime,
                    "input": step.input.to_string(), "tau_inverse": step.profile.to_string(),
                    "rank": step.profile.rank(), "cover": step.cover,
                    "matches": step.matches.iter().map(|m| m.to_string()).collect::<Vec<_>>(),
                    "profile": step.profile,
                }),
            ))
        }
        Command::Ar { subset, split } => {
            let kn = kn_of(cli)?;
            let i = parse_subset(subset, kn)?;
            if let Some(side) = split {
                let dir = match side {
                    SplitSide::Start => Direction::Start,
                    SplitSide::End => Direction::End,
                };
                let sp = ar_split_rule(&i, dir)?;
                return Ok(envelope(
                    "ar",
                    json!({
                        "subset": i.to_string(), "direction": dir, "i": sp.i,
                        "summand": sp.summand.to_string(), "complement": sp.complement.to_string(),
                    }),
                ));
            }
            let (s, e) = (ar_sequence_start(&i)?, ar_sequence_end(&i)?);
            let seq = |a: &grasscat_core::artube::ArSequence| {
                json!({ "left": a.left.to_string(), "middle": a.middle.to_string(), "right": a.right.to_string() })
            };
            Ok(envelope("ar", json!({ "subset": i.to_string(), "start": seq(&s), "end": seq(&e) })))
        }
        Command::Tube { start, max_steps } => {
            let kn = kn_of(cli)?;
            let p = parse_profile(start, kn)?;
            let cfg = config(cli, g.prime);
            let row = tube_walk(&p, *max_steps, &cfg)?;
            let names: Vec<String> = row.profiles.iter().map(|p| p.to_string()).collect();
            match fmt {
                Format::Dot => {
                    let mut s = String::from("digraph tube {\n  rankdir=LR;\n");
                    for (a, p) in row.profiles.iter().enumerate() {
                        let _ = writeln!(s, "  m{a} [label=\"{}\"];", dot_escape(p));
                    }
                    let m = row.profiles.len();
                    let closing = if row.period.is_some() { m } else { m.saturating_sub(1) };
                    for a in 0..closing {
                        let _ = writeln!(s, "  m{a} -> m{} [label=\"τ⁻¹\"];", (a + 1) % m);
                    }
                    s.push_str("}\n");
                    Ok(s)
                }
                Format::Tsv => Ok(names.join("\t") + "\n"),
                Format::Json => Ok(envelope(
                    "tube",
                    json!({ "seed": cfg.seed, "prime": cfg.prime, "row": names, "period": row.period }),
                )),
            }
        }
        Command::Census { no_tubes } => {
            let kn = kn_of(cli)?;
            if (kn.k, kn.n) != (3, 9) {
                return Err(anyhow!(grasscat_core::Error::Mismatch("the census is over (3,9)".into())));
            }
            let entries = census_39()?;
            if g.count_only {
                return Ok(format!("{}\n", entries.len()));
            }
            let cfg = config(cli, g.prime);
            let tubes: Vec<Option<String>> = if *no_tubes {
                vec![None; entries.len()]
            } else {
                entries.par_iter().map(|e| tube_id(&e.profile, 64, &cfg).map(|p| p.to_string())).collect()
            };
            if fmt == Format::Json {
                let rows: Vec<Value> = entries
                    .iter()
                    .zip(&tubes)
                    .map(|(e, t)| {
                        json!({ "profile": e.profile.to_string(), "q": e.q.to_string(),
                                "root_type": root_type_name(e.root_type), "tube_id": t })
                    })
                    .collect();
                return Ok(envelope("census", json!({ "seed": cfg.seed, "prime": cfg.prime, "count": rows.len(), "entries": rows })));
            }
            let mut s = format!("# seed {} prime {}\nprofile\tq\troot-type\ttube-id\n", cfg.seed, cfg.prime);
            for (e, t) in entries.iter().zip(&tubes) {
                let _ = writeln!(s, "{}\t{}\t{}\t{}", e.profile, e.q, root_type_name(e.root_type), t.as_deref().unwrap_or("-"));
            }
            Ok(s)
        }
        Command::Enumerate { kind, k, n, m } => {
            let kn = match (k, n, g.kn) {
                (Some(k), Some(n), _) => Kn { k: *k, n: *n },
                (None, None, Some(kn)) => kn,
                _ => return Err(usage("give --k and --n, or --kn")),
            };
            check_kn(kn, g.allow_large_k)?;
            let profiles: Vec<(Profile, Option<bool>)> = match kind {
                EnumKind::Rank2Boxes if g.count_only => {
                    return Ok(format!("{}\n", count_three_box_rank2(kn.k, kn.n)));
                }
                EnumKind::Rank2Boxes => enumerate_three_box_rank2(kn.k, kn.n).into_iter().map(|p| (p, None)).collect(),
                EnumKind::Canonical => enumerate_canonical_real(kn.k, kn.n, *m).into_iter().map(|p| (p, None)).collect(),
                EnumKind::Imaginary => {
                    if kn.k != 3 {
                        return Err(anyhow!(grasscat_core::Error::Mismatch("imaginary patterns need k = 3".into())));
                    }
                    enumerate_imaginary_rank3(kn.n).into_iter().map(|c| (c.profile, Some(c.rigid_pattern))).collect()
                }
            };
            if g.count_only {
                return Ok(format!("{}\n", profiles.len()));
            }
            if fmt == Format::Json {
                let rows: Vec<Value> = profiles
                    .iter()
                    .map(|(p, r)| match r {
                        Some(r) => json!({ "profile": p.to_string(), "rigid_pattern": r }),
                        None => json!(p.to_string()),
                    })
                    .collect();
                return Ok(envelope("enumerate", json!({ "k": kn.k, "n": kn.n, "count": rows.len(), "profiles": rows })));
            }
            let mut s = String::new();
            for (p, r) in &profiles {
                match r {
                    Some(r) => {
                        let _ = writeln!(s, "{p}\t{}", if *r { "rigid" } else { "non-rigid" });
                    }
                    None => {
                        let _ = writeln!(s, "{p}");
                    }
                }
            }
            Ok(s)
        }
        Command::OracleCheck { profile, matrices } => {
            let kn = kn_of(cli)?;
            let p = parse_profile(profile, kn)?;
            let trunc = g.trunc.unwrap_or(2 * kn.n);
            let mut per_prime = Vec::new();
            let mut verdicts = Vec::new();
            for prime in [g.prime, g.second_prime] {
                let cfg = config(cli, prime);
                let check = rigidity_check(&p, prime, &g.seed, &cfg)?;
                let f = Field::new(prime);
                let mut rng = ChaCha8Rng::seed_from_u64(g.seed[0]);
                let m = Module::from_profile(f, &p, &mut rng)?;
                let short = m.to_matrices(trunc)?;
                let long = m.to_matrices(2 * trunc)?;
                short.check_relations()?;
                long.check_relations()?;
                let (a, b) = (short.to_module()?, long.to_module()?);
                let stable = a.chain.iter().zip(&b.chain).all(|(x, y)| x.contains_space(f, y) && y.contains_space(f, x));
                verdicts.push((check.ext1, check.indecomposable));
                let mut entry = json!({
                    "prime": prime, "ext1": check.ext1, "rigid": check.ext1 == 0,
                    "indecomposable": check.indecomposable, "seed_discrepancy": check.discrepancy,
                    "cover": m.cover_indices(), "relations": true, "truncation_stable": stable,
                });
                if *matrices {
                    entry["matrices"] = serde_json::to_value(&short)?;
                }
                per_prime.push(entry);
            }
            if fmt == Format::Tsv {
                let mut s = String::from("prime\text1\tindecomposable\n");
                for e in &per_prime {
                    let _ = writeln!(s, "{}\t{}\t{}", e["prime"], e["ext1"], e["indecomposable"]);
                }
                return Ok(s);
            }
            Ok(envelope(
                "oracle-check",
                json!({
                    "profile": p.to_string(), "seeds": g.seed, "truncation": trunc,
                    "primes_agree": verdicts.windows(2).all(|w| w[0] == w[1]),
                    "results": per_prime,
                }),
            ))
        }
    }
}
