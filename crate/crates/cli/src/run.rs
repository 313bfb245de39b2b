use std::collections::BTreeMap;
use std::path::PathBuf;

use macwheel::current_algebra::{
    chi_c, enumerate_b_profiles, quotient_dim, reduce_to_admissible, reduction_in_ideal, relation_generic,
    relation_json, relation_rootofunity, verify_prop302, verify_recursion, w_space_dim, Relations,
};
use macwheel::linalg::RankMode;
use macwheel::macdonald::{
    check_integrality, compute_p, first_pole, integral_form_factor, specialize_p, verify_pieri, MacdonaldTable,
};
use macwheel::macdonald::pieri::cauchy_row_check;
use macwheel::partitions::{enumerate_admissible, lemma21_violations};
use macwheel::scalars::{ParameterSpec, UniRatFunc};
use macwheel::symfunc::clear_denominators;
use macwheel::wheel_ideal::{
    basis_i, dim_j, random_combination, satisfies_wheel, stability_failure, stability_operators, verify_rho_inclusion,
    verify_theorem1, wheel_substitutions, DimReport,
};
use macwheel::Error;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::args::{Char, Cli, Command, Current, Kr, List, Macd, RelationsArg, Verify, Wheel};

/// A serialized report and whether every requested check passed.
pub struct Outcome {
    pub value: Value,
    pub pass: bool,
}

impl Outcome {
    fn pass(value: Value) -> Self {
        Outcome { value, pass: true }
    }
}

/// Macdonald tables per number of variables, backed by an optional cache
/// directory.
struct Tables {
    dir: Option<PathBuf>,
    tables: BTreeMap<usize, MacdonaldTable>,
}

impl Tables {
    fn path(&self, n: usize) -> Option<PathBuf> {
        self.dir.as_ref().map(|d| d.join(format!("macdonald_n{n}.json")))
    }

    fn get(&mut self, n: usize) -> Result<&mut MacdonaldTable, Error> {
        if !self.tables.contains_key(&n) {
            let t = match self.path(n) {
                Some(p) if p.exists() => MacdonaldTable::load(&p)?,
                _ => MacdonaldTable::new(n),
            };
            self.tables.insert(n, t);
        }
        Ok(self.tables.get_mut(&n).expect("just inserted"))
    }

    fn save(&self) -> Result<(), Error> {
        let Some(dir) = &self.dir else { return Ok(()) };
        std::fs::create_dir_all(dir).map_err(|e| Error::InvalidParameter(format!("{}: {e}", dir.display())))?;
        for (&n, t) in &self.tables {
            t.save(&self.path(n).expect("cache directory set"))?;
        }
        Ok(())
    }
}

struct Ctx {
    mode: RankMode,
    recheck: bool,
    seed: u64,
    tables: Tables,
}

impl Ctx {
    /// Run a dimension computation; with --recheck a probe result is
    /// compared against the exact one.
    fn dim(&self, f: impl Fn(RankMode) -> Result<DimReport, Error>) -> Result<DimReport, Error> {
        let rep = f(self.mode)?;
        if self.recheck && matches!(self.mode, RankMode::Probe { .. }) {
            let exact = f(RankMode::Exact)?;
            if exact.dim != rep.dim {
                return Err(Error::Internal(format!("probe dimension {} but exact dimension {}", rep.dim, exact.dim)));
            }
            return Ok(exact);
        }
        Ok(rep)
    }
}

fn spec(kr: Kr) -> Result<ParameterSpec, Error> {
    ParameterSpec::new(kr.k, kr.r)
}

fn relations(kr: Kr, arg: RelationsArg) -> Result<Relations, Error> {
    Ok(match arg {
        RelationsArg::Resonant => Relations::Resonant(spec(kr)?),
        RelationsArg::RootOfUnity => Relations::RootOfUnity,
    })
}

fn dim_json(kr: Kr, n: usize, d: u32, key: &str, rep: &DimReport) -> Value {
    json!({"k": kr.k, "r": kr.r, "n": n, "d": d, key: rep.dim, "ambient": rep.ambient, "certified": rep.certified})
}

pub fn run(cli: Cli) -> Result<Outcome, Error> {
    let mut ctx = Ctx {
        mode: if cli.probe { RankMode::Probe { seed: cli.seed } } else { RankMode::Exact },
        recheck: cli.recheck,
        seed: cli.seed,
        tables: Tables { dir: cli.cache, tables: BTreeMap::new() },
    };
    let out = match cli.command {
        Command::Macd(c) => macd(c, &mut ctx),
        Command::Wheel(c) => wheel(c, &mut ctx),
        Command::Current(c) => current(c, &mut ctx),
        Command::Char(c) => characters(c, &mut ctx),
        Command::Verify(c) => verify(c, &mut ctx),
    }?;
    ctx.tables.save()?;
    Ok(out)
}

fn macd(c: Macd, ctx: &mut Ctx) -> Result<Outcome, Error> {
    match c {
        Macd::Compute { n, lambda, k, r } => {
            let table = ctx.tables.get(n)?;
            let (coefficients, specialization) = match (k, r) {
                (Some(k), Some(r)) => {
                    let p = ParameterSpec::new(k, r)?;
                    (specialize_p(&lambda, n, &p, table)?.to_json(), json!({"k": k, "r": r}))
                }
                _ => (compute_p(&lambda, n, table)?.to_json(), Value::Null),
            };
            Ok(Outcome::pass(json!({
                "lambda": lambda.to_padded_string(n),
                "n": n,
                "specialization": specialization,
                "coefficients": coefficients,
            })))
        }
        Macd::Pieri { n, lambda } => {
            let rep = verify_pieri(&lambda, n, ctx.tables.get(n)?)?;
            Ok(Outcome {
                pass: rep.ok(),
                value: json!({
                    "lambda": lambda.to_padded_string(n),
                    "n": n,
                    "e1": rep.e1,
                    "E0": rep.e0,
                    "E2": rep.e2,
                    "vanishing_ok": rep.vanishing_ok,
                    "first_failure": rep.first_failure(),
                }),
            })
        }
        Macd::Cauchy { n, d_max } => {
            let fail = cauchy_row_check(n, d_max, ctx.tables.get(n)?)?;
            Ok(Outcome { pass: fail.is_none(), value: json!({"n": n, "d_max": d_max, "ok": fail.is_none(), "first_failure": fail}) })
        }
        Macd::Integrality { n, lambda } => {
            let ok = check_integrality(&lambda, n, ctx.tables.get(n)?)?;
            Ok(Outcome {
                pass: ok,
                value: json!({
                    "lambda": lambda.to_padded_string(n),
                    "n": n,
                    "factor": integral_form_factor(&lambda).to_string(),
                    "ok": ok,
                }),
            })
        }
    }
}

fn wheel(c: Wheel, ctx: &mut Ctx) -> Result<Outcome, Error> {
    match c {
        Wheel::Subs { kr } => {
            spec(kr)?;
            Ok(Outcome::pass(json!({"k": kr.k, "r": kr.r, "substitutions": wheel_substitutions(kr.k, kr.r)})))
        }
        Wheel::Check { kr, n, lambda } => {
            let p = spec(kr)?;
            let f = specialize_p(&lambda, n, &p, ctx.tables.get(n)?)?;
            let ok = satisfies_wheel(&f, &p)?;
            Ok(Outcome {
                pass: ok,
                value: json!({"k": kr.k, "r": kr.r, "n": n, "lambda": lambda.to_padded_string(n), "satisfies_wheel": ok}),
            })
        }
        Wheel::Dim { kr, nd } => {
            let p = spec(kr)?;
            let rep = ctx.dim(|m| dim_j(&p, nd.n, nd.d, m))?;
            Ok(Outcome::pass(dim_json(kr, nd.n, nd.d, "dim_J", &rep)))
        }
        Wheel::Basis { kr, nd } => {
            let p = spec(kr)?;
            let adm = enumerate_admissible(kr.k as usize, kr.r, nd.n, nd.d);
            let basis = basis_i(&p, nd.n, nd.d, ctx.tables.get(nd.n)?)?;
            let items: Vec<Value> = adm
                .iter()
                .zip(&basis)
                .map(|(l, f)| json!({"lambda": l.to_padded_string(nd.n), "coefficients": f.to_json()}))
                .collect();
            Ok(Outcome::pass(json!({"k": kr.k, "r": kr.r, "n": nd.n, "d": nd.d, "basis": items})))
        }
    }
}

fn current(c: Current, ctx: &mut Ctx) -> Result<Outcome, Error> {
    match c {
        Current::Relation { kr, d, nu, sigma } => {
            spec(kr)?;
            let value = match (nu, sigma) {
                (Some(List(nu)), _) => relation_json(d, &nu, &relation_rootofunity(d, &nu, kr.k, kr.r)?),
                (None, Some(List(sigma))) => {
                    let rel = relation_generic(d, &sigma, &spec(kr)?)?;
                    relation_json(d, &sigma, &rel.map(UniRatFunc::from_laurent))
                }
                (None, None) => return Err(Error::InvalidParameter("give --nu or --sigma".into())),
            };
            Ok(Outcome::pass(value))
        }
        Current::Rank { kr, nd, relations: arg } => {
            let rel = relations(kr, arg)?;
            let rep = ctx.dim(|m| quotient_dim(kr.k, kr.r, nd.n, nd.d, &rel, m))?;
            Ok(Outcome::pass(dim_json(kr, nd.n, nd.d, "dim", &rep)))
        }
        Current::Reduce { kr, n, lambda } => {
            spec(kr)?;
            let red = reduce_to_admissible(&lambda, kr.k, kr.r, n)?;
            let ok = reduction_in_ideal(&lambda, kr.k, kr.r, n)?;
            Ok(Outcome { pass: ok, value: json!({"input": lambda.to_padded_string(n), "terms": red.terms_json(), "certified": ok}) })
        }
    }
}

fn characters(c: Char, ctx: &mut Ctx) -> Result<Outcome, Error> {
    match c {
        Char::Chi { kr, b: List(b), ranges } => Ok(Outcome::pass(chi_c(&b, kr.k, kr.r, ranges.d_max, ranges.n_max as u32)?.to_json())),
        Char::Recursion { kr, b: List(b), ranges } => {
            let ok = verify_recursion(&b, kr.k, kr.r, ranges.d_max, ranges.n_max as u32)?;
            Ok(Outcome { pass: ok, value: json!({"b": b, "d_max": ranges.d_max, "n_max": ranges.n_max, "ok": ok}) })
        }
        Char::WDim { kr, b: List(b), nd, relations: arg } => {
            let rel = relations(kr, arg)?;
            let rep = ctx.dim(|m| w_space_dim(&b, kr.k, kr.r, nd.n, nd.d, &rel, m))?;
            let mut v = dim_json(kr, nd.n, nd.d, "dim_W", &rep);
            v["b"] = json!(b);
            Ok(Outcome::pass(v))
        }
    }
}

fn verify(c: Verify, ctx: &mut Ctx) -> Result<Outcome, Error> {
    match c {
        Verify::Theorem1 { kr, ranges } => {
            let p = spec(kr)?;
            let mut reports = Vec::new();
            let mut pass = true;
            for n in 0..=ranges.n_max {
                for d in 0..=ranges.d_max {
                    let mode = ctx.mode;
                    let rep = verify_theorem1(&p, n, d, mode, ctx.tables.get(n)?)?;
                    if ctx.recheck && !rep.certified {
                        let exact = dim_j(&p, n, d, RankMode::Exact)?;
                        if exact.dim != rep.dim_j {
                            return Err(Error::Internal(format!("n={n} d={d}: probe dim_J {} but exact {}", rep.dim_j, exact.dim)));
                        }
                    }
                    pass &= rep.ok();
                    reports.push(json!({
                        "k": rep.k, "r": rep.r, "n": rep.n, "d": rep.d,
                        "dim_J": rep.dim_j,
                        "admissible_count": rep.admissible_count,
                        "inclusion_ok": rep.inclusion_ok,
                        "dims_equal": rep.dims_equal,
                        "certified": rep.certified,
                        "witness_failures": rep.witness_failures,
                    }));
                }
            }
            Ok(Outcome { pass, value: json!({"ok": pass, "reports": reports}) })
        }
        Verify::Prop302 { kr, b, ranges, relations: arg } => {
            let rel = relations(kr, arg)?;
            let profiles = match b {
                Some(List(b)) => vec![b],
                None => enumerate_b_profiles(kr.k, kr.r),
            };
            let mut reports = Vec::new();
            let mut pass = true;
            for b in profiles {
                let rep = verify_prop302(&b, kr.k, kr.r, ranges.d_max, ranges.n_max, &rel, ctx.mode)?;
                if ctx.recheck && !rep.certified {
                    let exact = verify_prop302(&b, kr.k, kr.r, ranges.d_max, ranges.n_max, &rel, RankMode::Exact)?;
                    if exact.mismatches != rep.mismatches {
                        return Err(Error::Internal(format!("b={b:?}: probe and exact dimensions disagree")));
                    }
                }
                pass &= rep.ok;
                reports.push(json!({
                    "b": rep.b,
                    "ok": rep.ok,
                    "certified": rep.certified,
                    "mismatches": rep.mismatches.iter().map(|&(d, n, w, c)| json!({"d": d, "n": n, "dim_W": w, "chi": c})).collect::<Vec<_>>(),
                }));
            }
            Ok(Outcome { pass, value: json!({"ok": pass, "reports": reports}) })
        }
        Verify::Stability { kr, nd, samples } => {
            let p = spec(kr)?;
            let basis: Vec<_> = basis_i(&p, nd.n, nd.d, ctx.tables.get(nd.n)?)?.iter().map(|f| clear_denominators(f).1).collect();
            let ops = stability_operators(nd.n);
            let mut rng = ChaCha8Rng::seed_from_u64(ctx.seed);
            let mut failures = Vec::new();
            if !basis.is_empty() {
                for i in 0..samples {
                    let f = random_combination(&basis, nd.n, &mut rng);
                    if let Some(op) = stability_failure(&f, &p, &ops)? {
                        failures.push(json!({"sample": i, "operator": op.to_string()}));
                    }
                }
            }
            let pass = failures.is_empty();
            Ok(Outcome {
                pass,
                value: json!({
                    "k": kr.k, "r": kr.r, "n": nd.n, "d": nd.d,
                    "basis_size": basis.len(),
                    "samples": if basis.is_empty() { 0 } else { samples },
                    "operators": ops.iter().map(|o| o.to_string()).collect::<Vec<_>>(),
                    "ok": pass,
                    "failures": failures,
                }),
            })
        }
        Verify::Rho { kr, n, lambda, j_max } => {
            let p = spec(kr)?;
            let ok = verify_rho_inclusion(&lambda, &p, n, j_max, ctx.tables.get(n)?)?;
            Ok(Outcome {
                pass: ok,
                value: json!({
                    "k": kr.k, "r": kr.r, "n": n,
                    "lambda": lambda.to_padded_string(n),
                    "admissible": lambda.is_admissible(kr.k as usize, kr.r, n),
                    "j_max": j_max,
                    "ok": ok,
                }),
            })
        }
        Verify::Lemma21 { kr, ranges } => {
            spec(kr)?;
            let mut checked = 0;
            let mut failures = Vec::new();
            for n in 0..=ranges.n_max {
                for d in 0..=ranges.d_max {
                    for l in enumerate_admissible(kr.k as usize, kr.r, n, d) {
                        checked += 1;
                        let v = lemma21_violations(&l, kr.k, kr.r, n)?;
                        if !v.is_empty() {
                            failures.push(json!({
                                "lambda": l.to_padded_string(n),
                                "n": n,
                                "violations": v.iter().map(|c| json!({"i": c.i, "j": c.j, "condition": c.which, "q_exp": c.a, "t_exp": c.b})).collect::<Vec<_>>(),
                            }));
                        }
                    }
                }
            }
            let pass = failures.is_empty();
            Ok(Outcome { pass, value: json!({"k": kr.k, "r": kr.r, "checked": checked, "ok": pass, "failures": failures}) })
        }
        Verify::Lemma22 { kr, ranges } => {
            let p = spec(kr)?;
            let mut poles = Vec::new();
            for n in 0..=ranges.n_max {
                if let Some(l) = first_pole(&p, n, ranges.d_max, ctx.tables.get(n)?)? {
                    poles.push(json!({"n": n, "lambda": l.to_padded_string(n)}));
                }
            }
            let pass = poles.is_empty();
            Ok(Outcome { pass, value: json!({"k": kr.k, "r": kr.r, "n_max": ranges.n_max, "d_max": ranges.d_max, "ok": pass, "poles": poles}) })
        }
    }
}
