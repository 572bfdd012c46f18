//! Command-line front end.
//!
//! Each subcommand runs one family of exact verifications and produces a
//! [`Report`]: human-readable by default, canonical JSON with `--json`.
//! Exit codes: `0` when every check passes, `1` when a mathematical check
//! fails (the report carries the counterexample), `2` on usage or
//! expression errors. Randomized checks draw from a seeded generator;
//! `--seed` defaults to the `SUPERGEO_SEED` environment variable, then `0`.

use std::ffi::OsString;
use std::sync::Arc;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};

use crate::dmodule::{canonicalize, Chirality, PhiModule};
use crate::dskew::{azumaya_certificate, dinvert, dmul, Side};
use crate::error::{Error, Result};
use crate::g11m::{embed_sl11, from_dstar, ginv, gmul, to_dstar, GroupElement};
use crate::parse::parse_expression;
use crate::picompose::{
    apply_matrix, boxtimes, compose_operator, eigenspace, morita_commutant_rank, spans_match,
    supercommutant, tensor_basis_matrix, BimoduleTensor, BoxVariant, CommutantBasis,
};
use crate::piproj::{
    coordinate_table, d_quotient, eta_of, even_composition_identity, even_inverse_identity,
    invariant_functions, odd_composition_identity, odd_inverse_identity, section_relations,
    sections, transition, w_of, BundleContext, CellContext,
};
use crate::report::Report;
use crate::sampling::Sampler;
use crate::scalar::Scalar;
use crate::supermatrix::{Shape, SuperMatrix};
use crate::superpoly::{Parity, SuperPolynomial, VarTable};

#[derive(Parser, Debug)]
#[command(
    name = "supergeo",
    version,
    about = "Exact verifications for the rank 1|1 skew field and its projective geometry"
)]
struct Cli {
    /// Emit the report as a canonical JSON document.
    #[arg(long, global = true)]
    json: bool,

    /// Seed for randomized checks.
    #[arg(long, global = true, env = "SUPERGEO_SEED", default_value_t = 0)]
    seed: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Matrix certificate for the skew field over its even center.
    AzumayaCheck,
    /// Bring an odd structure matrix to the standard off-diagonal form.
    Canonicalize {
        /// Matrix entries in row-major order (four occurrences), parsed
        /// over invertible z0..z9 and odd zeta0..zeta9; omit for the
        /// generic symbolic example.
        #[arg(long = "expr")]
        expr: Vec<String>,
    },
    /// Group laws, the matrix embedding, and the unit-group isomorphism.
    GroupCheck,
    /// Test a chart polynomial for invariance under the coordinate action.
    InvariantCheck {
        /// Number of coordinate pairs minus one.
        #[arg(long, default_value_t = 1)]
        n: usize,
        /// Chart index whose even coordinate is inverted.
        #[arg(long, default_value_t = 0)]
        i: usize,
        /// Polynomial over z0..zn, zeta0..zetan with z_i invertible.
        #[arg(long)]
        expr: String,
    },
    /// Rewrite an invariant in the abstract cell generators y_j, tau_j.
    Decompose {
        #[arg(long, default_value_t = 1)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        i: usize,
        #[arg(long)]
        expr: String,
    },
    /// The four transition-cocycle identities on all overlaps.
    Identities {
        #[arg(long, default_value_t = 1)]
        n: usize,
    },
    /// Chart times group against the coordinate patch: mutually inverse
    /// maps and equivariance.
    BundleCheck {
        #[arg(long, default_value_t = 1)]
        n: usize,
        /// Restrict to one chart; all charts when omitted.
        #[arg(long)]
        i: Option<usize>,
    },
    /// Tautological section relations, transition matrices, quotients.
    OpiRelations {
        #[arg(long, default_value_t = 1)]
        n: usize,
        #[arg(long)]
        i: Option<usize>,
    },
    /// Degree-bounded exact search for global invariant functions.
    GlobalSections {
        #[arg(long, default_value_t = 1)]
        n: usize,
        #[arg(long, default_value_t = 4)]
        degree_bound: i64,
        /// Allow negative powers of every even coordinate.
        #[arg(long)]
        laurent: bool,
    },
    /// Supercommutant products: closed form, box products, eigenspaces.
    Compose,
    /// Commutant ranks across the module equivalence.
    MoritaCheck,
}

/// Parses the argument list and runs one subcommand, returning the exit
/// code and the rendered output.
pub fn run<I, S>(argv: I) -> (i32, String)
where
    I: IntoIterator<Item = S>,
    S: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 2,
            };
            return (code, e.to_string());
        }
    };
    let mut report = Report::new(command_name(&cli.command));
    match execute(&cli, &mut report) {
        Ok(()) => {
            let out = if cli.json {
                report.render_json()
            } else {
                report.render_human()
            };
            (if report.passed() { 0 } else { 1 }, out)
        }
        Err(err) => {
            if usage_error(&err) {
                (2, format!("error: {err}\n"))
            } else {
                report.check("completed", false);
                report.witness_str("error", &err);
                let out = if cli.json {
                    report.render_json()
                } else {
                    report.render_human()
                };
                (1, out)
            }
        }
    }
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::AzumayaCheck => "azumaya-check",
        Command::Canonicalize { .. } => "canonicalize",
        Command::GroupCheck => "group-check",
        Command::InvariantCheck { .. } => "invariant-check",
        Command::Decompose { .. } => "decompose",
        Command::Identities { .. } => "identities",
        Command::BundleCheck { .. } => "bundle-check",
        Command::OpiRelations { .. } => "opi-relations",
        Command::GlobalSections { .. } => "global-sections",
        Command::Compose => "compose",
        Command::MoritaCheck => "morita-check",
    }
}

/// Errors that indicate a malformed invocation rather than a failed
/// mathematical check.
fn usage_error(e: &Error) -> bool {
    matches!(
        e,
        Error::SyntaxError { .. }
            | Error::UnknownVariable(_)
            | Error::InvalidArgument(_)
            | Error::ContextMismatch(_)
            | Error::NotAUnit(_)
            | Error::ParityMismatch(_)
            | Error::ShapeMismatch(_)
    )
}

fn execute(cli: &Cli, report: &mut Report) -> Result<()> {
    match &cli.command {
        Command::AzumayaCheck => cmd_azumaya(report),
        Command::Canonicalize { expr } => cmd_canonicalize(expr, report),
        Command::GroupCheck => cmd_group_check(cli.seed, report),
        Command::InvariantCheck { n, i, expr } => cmd_invariant_check(*n, *i, expr, report),
        Command::Decompose { n, i, expr } => cmd_decompose(*n, *i, expr, report),
        Command::Identities { n } => cmd_identities(*n, report),
        Command::BundleCheck { n, i } => cmd_bundle_check(*n, *i, report),
        Command::OpiRelations { n, i } => cmd_opi_relations(*n, *i, report),
        Command::GlobalSections {
            n,
            degree_bound,
            laurent,
        } => cmd_global_sections(*n, *degree_bound, *laurent, report),
        Command::Compose => cmd_compose(cli.seed, report),
        Command::MoritaCheck => cmd_morita(report),
    }
}

fn charts(n: usize, i: Option<usize>) -> Result<Vec<usize>> {
    match i {
        Some(i) if i > n => Err(Error::InvalidArgument(format!(
            "cell index {i} exceeds dimension {n}"
        ))),
        Some(i) => Ok(vec![i]),
        None => Ok((0..=n).collect()),
    }
}

fn odd_2x2(table: &Arc<VarTable>, entries: [SuperPolynomial; 4]) -> Result<SuperMatrix> {
    let [a, b, c, d] = entries;
    SuperMatrix::from_rows(
        table,
        Shape::new(1, 1),
        Shape::new(1, 1),
        Parity::Odd,
        vec![vec![a, b], vec![c, d]],
    )
}

fn cmd_azumaya(report: &mut Report) -> Result<()> {
    let table = VarTable::new(&[], &[])?;
    let cert = azumaya_certificate(&table)?;
    report.check("basis-map-injective", cert.injective);
    report.check("half-integer-coefficients", cert.half_integer_coefficients());

    let one = SuperPolynomial::one(&table);
    let zero = SuperPolynomial::zero(&table);
    let frozen: [SuperMatrix; 4] = [
        SuperMatrix::identity(&table, Shape::new(1, 1)),
        odd_2x2(&table, [zero.clone(), -&one, one.clone(), zero.clone()])?,
        odd_2x2(&table, [zero.clone(), one.clone(), one.clone(), zero.clone()])?,
        SuperMatrix::from_rows(
            &table,
            Shape::new(1, 1),
            Shape::new(1, 1),
            Parity::Even,
            vec![vec![-&one, zero.clone()], vec![zero.clone(), one.clone()]],
        )?,
    ];
    report.check("frozen-basis-images", cert.psi_images == frozen);

    let h = |k: i64| Scalar::ratio(k, 2);
    let expected = [
        [h(1), h(0), h(0), h(-1)],
        [h(0), h(-1), h(1), h(0)],
        [h(0), h(1), h(1), h(0)],
        [h(1), h(0), h(0), h(1)],
    ];
    report.check("frozen-unit-coefficients", cert.coefficients == expected);

    // The certificate is unchanged over a polynomial base.
    let poly = VarTable::new(&[("z0", true)], &["zeta0"])?;
    let cert2 = azumaya_certificate(&poly)?;
    report.check(
        "stable-over-polynomial-base",
        cert2.injective && cert2.coefficients == expected,
    );

    for (label, m) in cert.basis_labels.iter().zip(&cert.psi_images) {
        report.witness_matrix(&format!("psi({label})"), m);
    }
    Ok(())
}

fn cmd_canonicalize(exprs: &[String], report: &mut Report) -> Result<()> {
    let module = if exprs.is_empty() {
        let table = VarTable::new(&[("a", true)], &["alpha"])?;
        let a = SuperPolynomial::even_var(&table, 0)?;
        let alpha = SuperPolynomial::odd_var(&table, 0)?;
        let m = odd_2x2(
            &table,
            [alpha.clone(), a.clone(), a.pow(-1)?, -&alpha],
        )?;
        report.input("phi", &m);
        PhiModule::new(m, Chirality::RightD)?
    } else if exprs.len() == 4 {
        let evens: Vec<(String, bool)> = (0..10).map(|k| (format!("z{k}"), true)).collect();
        let even_refs: Vec<(&str, bool)> = evens.iter().map(|(s, b)| (s.as_str(), *b)).collect();
        let odds: Vec<String> = (0..10).map(|k| format!("zeta{k}")).collect();
        let odd_refs: Vec<&str> = odds.iter().map(|s| s.as_str()).collect();
        let table = VarTable::new(&even_refs, &odd_refs)?;
        let parsed: Vec<SuperPolynomial> = exprs
            .iter()
            .map(|e| parse_expression(e, &table))
            .collect::<Result<_>>()?;
        let m = odd_2x2(
            &table,
            [
                parsed[0].clone(),
                parsed[1].clone(),
                parsed[2].clone(),
                parsed[3].clone(),
            ],
        )?;
        report.input("phi", &m);
        PhiModule::new(m, Chirality::RightD)?
    } else {
        return Err(Error::InvalidArgument(
            "canonicalize takes exactly four --expr entries (row major) or none".into(),
        ));
    };
    let cert = canonicalize(&module)?;
    let id = SuperMatrix::identity(module.table(), Shape::new(1, 1));
    report.check(
        "base-change-invertible",
        cert.base_change.matmul(&cert.base_change_inv)? == id
            && cert.base_change_inv.matmul(&cert.base_change)? == id,
    );
    let standard = PhiModule::canonical(module.table(), Chirality::RightD);
    report.check("conjugate-is-standard", cert.conjugated == standard.phi);
    report.witness_matrix("base-change", &cert.base_change);
    report.witness_matrix("conjugated", &cert.conjugated);
    Ok(())
}

fn cmd_group_check(seed: u64, report: &mut Report) -> Result<()> {
    let table = VarTable::new(
        &[("t1", true), ("t2", true), ("t3", true)],
        &["s1", "s2", "s3"],
    )?;
    let g: Vec<GroupElement> = (0..3)
        .map(|k| {
            GroupElement::new(
                SuperPolynomial::even_var(&table, k)?,
                SuperPolynomial::odd_var(&table, k)?,
            )
        })
        .collect::<Result<_>>()?;
    let id = GroupElement::identity(&table);
    report.check(
        "associative-symbolic",
        gmul(&gmul(&g[0], &g[1])?, &g[2])? == gmul(&g[0], &gmul(&g[1], &g[2])?)?,
    );
    report.check(
        "inverse-symbolic",
        gmul(&g[0], &ginv(&g[0])?)? == id && gmul(&ginv(&g[0])?, &g[0])? == id,
    );
    let le = embed_sl11(&g[0])?;
    let re = embed_sl11(&g[1])?;
    report.check(
        "embedding-multiplicative",
        le.matmul(&re)? == embed_sl11(&gmul(&g[0], &g[1])?)?,
    );
    report.check(
        "berezinian-one",
        le.berezinian()?.is_one() && re.berezinian()?.is_one(),
    );
    let product = gmul(&g[0], &g[1])?;
    report.check(
        "skew-unit-isomorphism",
        to_dstar(&product) == dmul(&to_dstar(&g[0]), &to_dstar(&g[1]), Side::Plain)?
            && from_dstar(&to_dstar(&g[0]))? == g[0]
            && to_dstar(&ginv(&g[0])?) == dinvert(&to_dstar(&g[0]))?,
    );

    let mut sampler = Sampler::new(seed);
    let mut randomized = true;
    for _ in 0..20 {
        let h: Vec<GroupElement> = (0..3)
            .map(|_| {
                GroupElement::new(sampler.unit(&table, 2), sampler.odd(&table, 2, 2))
            })
            .collect::<Result<_>>()?;
        let assoc = gmul(&gmul(&h[0], &h[1])?, &h[2])? == gmul(&h[0], &gmul(&h[1], &h[2])?)?;
        let inv = gmul(&h[0], &ginv(&h[0])?)? == id;
        if !(assoc && inv) {
            randomized = false;
            report.witness_str("counterexample", &h[0]);
            break;
        }
    }
    report.check("randomized-samples", randomized);
    Ok(())
}

fn cmd_invariant_check(n: usize, i: usize, expr: &str, report: &mut Report) -> Result<()> {
    let ctx = CellContext::new(n, i)?;
    let p = parse_expression(expr, ctx.table())?;
    report.input("n", n);
    report.input("i", i);
    report.input("expr", &p);
    let invariant = ctx.is_invariant(&p)?;
    report.check("invariant", invariant);
    if !invariant {
        let moved = ctx.action()?.apply(&p)?;
        report.witness_str("difference", &(&moved - &p));
    }
    Ok(())
}

fn cmd_decompose(n: usize, i: usize, expr: &str, report: &mut Report) -> Result<()> {
    let ctx = CellContext::new(n, i)?;
    let p = parse_expression(expr, ctx.table())?;
    report.input("n", n);
    report.input("i", i);
    report.input("expr", &p);
    match ctx.decompose(&p) {
        Ok(cell) => {
            report.check("invariant", true);
            report.check("expansion-matches", ctx.expand(&cell)? == p);
            report.witness_str("cell-polynomial", &cell);
        }
        Err(Error::NotInvariant(_)) => {
            report.check("invariant", false);
            let moved = ctx.action()?.apply(&p)?;
            report.witness_str("difference", &(&moved - &p));
        }
        Err(Error::LemmaViolation(msg)) => {
            report.check("invariant", true);
            report.check("head-terms-generate", false);
            report.witness_str("remainder", msg);
        }
        Err(e) => return Err(e),
    }
    Ok(())
}

fn cmd_identities(n: usize, report: &mut Report) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidArgument(
            "identities need at least two charts (n >= 1)".into(),
        ));
    }
    report.input("n", n);
    let mut blocks = [true; 4];
    let mut note = |report: &mut Report, slot: usize, r: Result<()>| -> Result<()> {
        match r {
            Ok(()) => Ok(()),
            Err(Error::StructureMismatch(msg)) => {
                if blocks[slot] {
                    report.witness_str(&format!("counterexample-{slot}"), &msg);
                }
                blocks[slot] = false;
                Ok(())
            }
            Err(e) => Err(e),
        }
    };
    for i in 0..=n {
        for j in 0..=n {
            if i == j {
                continue;
            }
            note(report, 0, even_inverse_identity(n, i, j))?;
            note(report, 1, odd_inverse_identity(n, i, j))?;
            for k in 0..=n {
                if k != i && k != j {
                    note(report, 2, even_composition_identity(n, i, j, k))?;
                    note(report, 3, odd_composition_identity(n, i, j, k))?;
                }
            }
        }
    }
    report.check("even-inverse", blocks[0]);
    report.check("odd-inverse", blocks[1]);
    report.check("even-composition", blocks[2]);
    report.check("odd-composition", blocks[3]);
    Ok(())
}

fn cmd_bundle_check(n: usize, i: Option<usize>, report: &mut Report) -> Result<()> {
    report.input("n", n);
    for i in charts(n, i)? {
        let bundle = BundleContext::new(n, i)?;
        report.check(
            &format!("charts-compose-i{i}"),
            bundle.check_composites().is_ok(),
        );
        report.check(
            &format!("equivariant-i{i}"),
            bundle.check_equivariance().is_ok(),
        );
    }
    Ok(())
}

fn cmd_opi_relations(n: usize, i: Option<usize>, report: &mut Report) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidArgument(
            "section relations need at least two charts (n >= 1)".into(),
        ));
    }
    report.input("n", n);
    let mut shown = false;
    for i in charts(n, i)? {
        let ctx = CellContext::new(n, i)?;
        report.check(
            &format!("section-relations-i{i}"),
            section_relations(&ctx).is_ok(),
        );
        let table = coordinate_table(n, &[i], false)?;
        let (si, _) = sections(&table, i)?;
        let mut quotients = true;
        let mut bers = true;
        for j in 0..=n {
            if j == i {
                continue;
            }
            let (sj, _) = sections(&table, j)?;
            let (even, odd) = d_quotient(&si, &sj)?;
            quotients = quotients
                && even == w_of(&table, i, j)?
                && odd == eta_of(&table, i, j)?;
            let (m, ber) = transition(n, i, j)?;
            bers = bers && ber.is_one();
            if !shown {
                report.witness_matrix(&format!("transition-{i}-{j}"), &m);
                shown = true;
            }
        }
        report.check(&format!("quotients-recover-transitions-i{i}"), quotients);
        report.check(&format!("berezinian-one-i{i}"), bers);
    }
    Ok(())
}

fn cmd_global_sections(
    n: usize,
    degree_bound: i64,
    laurent: bool,
    report: &mut Report,
) -> Result<()> {
    report.input("n", n);
    report.input("degree-bound", degree_bound);
    report.input("laurent", laurent);
    let functions = invariant_functions(n, degree_bound, laurent)?;
    let rendered: Vec<serde_json::Value> = functions
        .iter()
        .map(|f| serde_json::Value::String(f.to_string()))
        .collect();
    report.witness("invariants", serde_json::Value::Array(rendered));
    report.check(
        "only-constants",
        functions.len() == 1 && functions[0].is_one(),
    );
    Ok(())
}

fn const_vec(table: &Arc<VarTable>, raw: [&str; 4]) -> Result<Vec<SuperPolynomial>> {
    raw.iter().map(|s| parse_expression(s, table)).collect()
}

fn conjugated_round(
    sampler: &mut Sampler,
    table: &Arc<VarTable>,
    left: &SuperMatrix,
    right: &SuperMatrix,
) -> Result<bool> {
    let sample = |s: &mut Sampler| -> Result<SuperMatrix> {
        SuperMatrix::from_rows(
            table,
            Shape::new(1, 1),
            Shape::new(1, 1),
            Parity::Even,
            vec![
                vec![s.unit(table, 1), s.odd(table, 1, 1)],
                vec![s.odd(table, 1, 1), s.unit(table, 1)],
            ],
        )
    };
    let c = sample(sampler)?;
    let c2 = sample(sampler)?;
    let conj = |m: &SuperMatrix, c: &SuperMatrix| -> Result<SuperMatrix> {
        c.inverse()?.matmul(m)?.matmul(c)
    };
    let tensor = BimoduleTensor::new(conj(left, &c)?, conj(right, &c2)?)?;
    let basis = supercommutant(&tensor)?;
    let k = tensor_basis_matrix(&c, &c2)?;
    let transported = CommutantBasis {
        u: apply_matrix(&k, &basis.u),
        v: apply_matrix(&k, &basis.v),
    };
    let closed = CommutantBasis::closed_form(table);
    if !spans_match(&transported, &closed)? {
        return Ok(false);
    }
    let phi = PhiModule::new(conj(right, &c)?, Chirality::RightD)?;
    let phi2 = PhiModule::new(conj(right, &c2)?, Chirality::RightD)?;
    let op = compose_operator(&phi, &phi2)?;
    Ok(
        spans_match(&eigenspace(&op, true)?, &boxtimes(&phi, &phi2, BoxVariant::Plain)?)?
            && spans_match(
                &eigenspace(&op, false)?,
                &boxtimes(&phi, &phi2, BoxVariant::Opposite)?,
            )?,
    )
}

fn cmd_compose(seed: u64, report: &mut Report) -> Result<()> {
    let table = VarTable::new(&[], &[])?;
    let one = SuperPolynomial::one(&table);
    let zero = SuperPolynomial::zero(&table);
    let left = odd_2x2(&table, [zero.clone(), -&one, one.clone(), zero.clone()])?;
    let right = odd_2x2(&table, [zero.clone(), one.clone(), one.clone(), zero.clone()])?;
    let tensor = BimoduleTensor::new(left.clone(), right.clone())?;
    report.check("actions-commute", tensor.actions_commute());
    let basis = supercommutant(&tensor)?;
    let closed = CommutantBasis::closed_form(&table);
    report.check("closed-form-commutant", spans_match(&basis, &closed)?);
    report.witness_str("u", render_vec(&basis.u));
    report.witness_str("v", render_vec(&basis.v));

    let phi = PhiModule::new(right.clone(), Chirality::RightD)?;
    let plain = boxtimes(&phi, &phi, BoxVariant::Plain)?;
    let opp = boxtimes(&phi, &phi, BoxVariant::Opposite)?;
    report.check(
        "plain-box-frozen",
        plain.u == const_vec(&table, ["1", "-i", "0", "0"])?
            && plain.v == const_vec(&table, ["0", "0", "1", "-i"])?,
    );
    report.check(
        "opposite-box-frozen",
        opp.u == const_vec(&table, ["1", "i", "0", "0"])?
            && opp.v == const_vec(&table, ["0", "0", "1", "i"])?,
    );
    let op = compose_operator(&phi, &phi)?;
    report.check("operator-squares-to-minus-one", op.matmul(&op)?.neg().is_identity());
    report.check(
        "plus-eigenspace-is-plain",
        spans_match(&eigenspace(&op, true)?, &plain)?,
    );
    report.check(
        "minus-eigenspace-is-opposite",
        spans_match(&eigenspace(&op, false)?, &opp)?,
    );

    let poly = VarTable::new(&[("z0", true)], &["zeta0"])?;
    let lp = odd_2x2(
        &poly,
        [
            SuperPolynomial::zero(&poly),
            -&SuperPolynomial::one(&poly),
            SuperPolynomial::one(&poly),
            SuperPolynomial::zero(&poly),
        ],
    )?;
    let rp = odd_2x2(
        &poly,
        [
            SuperPolynomial::zero(&poly),
            SuperPolynomial::one(&poly),
            SuperPolynomial::one(&poly),
            SuperPolynomial::zero(&poly),
        ],
    )?;
    let mut sampler = Sampler::new(seed);
    let mut rounds = true;
    for _ in 0..5 {
        if !conjugated_round(&mut sampler, &poly, &lp, &rp)? {
            rounds = false;
            break;
        }
    }
    report.check("conjugated-rounds", rounds);
    Ok(())
}

fn render_vec(v: &[SuperPolynomial]) -> String {
    let parts: Vec<String> = v.iter().map(|p| p.to_string()).collect();
    format!("({})", parts.join(", "))
}

fn cmd_morita(report: &mut Report) -> Result<()> {
    for (e, o) in [(1usize, 0usize), (0, 1), (1, 1)] {
        let (re, ro) = morita_commutant_rank(e, o)?;
        report.check(&format!("rank-{e}|{o}-round-trips"), (re, ro) == (e, o));
        report.witness_str(&format!("commutant-rank-{e}|{o}"), format!("{re}|{ro}"));
    }
    Ok(())
}
