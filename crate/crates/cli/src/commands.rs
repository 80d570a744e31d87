use anyhow::{bail, ensure, Context, Result};
use num_bigint::BigInt;
use serde_json::{json, Value};

use lglaisher::companions::{equinumerosity_report, Variant};
use lglaisher::glaisher::{phi_forward_direct, phi_forward_iterative, phi_inverse, SmallestFirst};
use lglaisher::little_glaisher::{
    little_glaisher_inverse, optimal_factorization, order_dependence_report, prime_factorization,
    validate_factorization, CompatibleFactorization, Strategy,
};
use lglaisher::partition::{enumerate_overpartitions, enumerate_partitions, regular_partitions};
use lglaisher::qseries::{eta_quotient_side, glaisher_series, regular_product_side};
use lglaisher::table::{bijection_table, render_grid, render_human, render_tsv, BijectionRow};
use lglaisher::verify::{
    verify_bijection, verify_glaisher, verify_mixed_radix, verify_series, verify_series_counts,
    SweepOutcome,
};
use lglaisher::{FactorList, Partition, Series};

use crate::{
    Command, CompanionArgs, EnumerateArgs, FactorizeArgs, Format, MapArgs, OrderReportArgs,
    Outcome, SeriesArgs, StrategyArgs, StrategyName, TableArgs, VerifyArgs,
};

/// Factor pool for the mixed-radix sweep.
const RADIX_POOL: [u64; 7] = [1, 2, 3, 4, 5, 6, 7];

pub fn run(command: Command) -> Result<Outcome> {
    match command {
        Command::Map(args) => map(args, false),
        Command::Inverse(args) => map(args, true),
        Command::Enumerate(args) => enumerate(args),
        Command::Series(args) => series(args),
        Command::Verify(args) => verify(args),
        Command::Table(args) => table(args),
        Command::Companions(args) => companions(args),
        Command::Factorize(args) => factorize(args),
        Command::OrderReport(args) => order_report(args),
    }
}

fn parse_partition(s: &str) -> Result<Partition> {
    s.parse().with_context(|| format!("invalid partition `{s}`"))
}

fn parse_factor_list(s: &str) -> Result<FactorList> {
    let factors = s
        .split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<u64>().with_context(|| format!("invalid factor `{t}`")))
        .collect::<Result<Vec<_>>>()?;
    Ok(FactorList::new(factors)?)
}

/// `"2,2/2,3"` as factor lists for `k` and `l`.
fn parse_factors(s: &str, k: u64, l: u64) -> Result<CompatibleFactorization> {
    let (kf, lf) = s
        .split_once('/')
        .with_context(|| format!("--factors `{s}` must look like `2,2/2,3`"))?;
    Ok(validate_factorization(parse_factor_list(kf)?, parse_factor_list(lf)?, k, l)?)
}

fn strategy(args: &StrategyArgs, k: u64, l: u64) -> Result<Strategy> {
    Ok(match (&args.factors, args.strategy) {
        (Some(f), _) => Strategy::Explicit(parse_factors(f, k, l)?),
        (None, StrategyName::Prime) => Strategy::Prime,
        (None, StrategyName::Optimal) => Strategy::Optimal,
    })
}

fn positive(name: &str, v: u64) -> Result<()> {
    ensure!(v >= 1, "--{name} must be at least 1");
    Ok(())
}

fn grid_json(grid: &[Vec<Partition>]) -> Value {
    json!(grid
        .iter()
        .map(|row| row.iter().map(ToString::to_string).collect::<Vec<_>>())
        .collect::<Vec<_>>())
}

fn map(args: MapArgs, inverse: bool) -> Result<Outcome> {
    let input = parse_partition(&args.partition)?;
    let k = args.k;
    let Some(l) = args.l else {
        ensure!(args.strategy.factors.is_none(), "--factors needs --l");
        ensure!(!args.show_grid, "--show-grid needs --l");
        ensure!(!(args.trace && inverse), "--trace is only available for `map`");
        return glaisher(&input, k, inverse, args.trace, args.format);
    };
    ensure!(!args.trace, "--trace applies to Glaisher's map; drop --l");
    positive("k", k)?;
    positive("l", l)?;
    let strategy = strategy(&args.strategy, k, l)?;
    let output = if inverse {
        little_glaisher_inverse(&input, k, l, &strategy)?
    } else {
        BijectionRow::new(input.clone(), k, l, &strategy)?.mu
    };
    // grids always describe the forward direction
    let lambda = if inverse { output.clone() } else { input.clone() };
    let row = if args.show_grid {
        Some(BijectionRow::new(lambda, k, l, &strategy)?)
    } else {
        None
    };
    match args.format {
        Format::Human => {
            if let Some(row) = &row {
                println!("lambda grid: {}", render_grid(&row.lambda_grid));
                println!("mu grid: {}", render_grid(&row.mu_grid));
            }
            println!("{output}");
        }
        Format::Tsv => {
            println!("input\toutput");
            println!("{input}\t{output}");
        }
        Format::Json => {
            let mut v = json!({
                "k": k,
                "l": l,
                "direction": if inverse { "inverse" } else { "forward" },
                "input": input.to_string(),
                "output": output.to_string(),
            });
            if let Some(row) = &row {
                v["lambda_grid"] = grid_json(&row.lambda_grid);
                v["mu_grid"] = grid_json(&row.mu_grid);
            }
            println!("{v}");
        }
    }
    Ok(Outcome::Ok)
}

fn glaisher(input: &Partition, k: u64, inverse: bool, trace: bool, format: Format) -> Result<Outcome> {
    let output = if inverse {
        phi_inverse(input, k)?
    } else if trace {
        let (out, trace) = phi_forward_iterative(input, k, &mut SmallestFirst)?;
        for step in &trace.steps {
            println!("{}", serde_json::to_string(step)?);
        }
        out
    } else {
        phi_forward_direct(input, k)?
    };
    match format {
        Format::Human => println!("{output}"),
        Format::Tsv => println!("input\toutput\n{input}\t{output}"),
        Format::Json => println!(
            "{}",
            json!({"k": k, "input": input.to_string(), "output": output.to_string()})
        ),
    }
    Ok(Outcome::Ok)
}

fn enumerate(args: EnumerateArgs) -> Result<Outcome> {
    let items: Vec<String> = if args.over {
        enumerate_overpartitions(args.n, |_| true)
            .iter()
            .map(ToString::to_string)
            .collect()
    } else {
        let list = match (args.k, args.l) {
            (Some(k), Some(l)) => {
                positive("k", k)?;
                regular_partitions(args.n, k, l)
            }
            (Some(k), None) => {
                positive("k", k)?;
                enumerate_partitions(args.n, |p| p.is_k_regular(k))
            }
            (None, Some(l)) => enumerate_partitions(args.n, |p| p.multiplicities_below(l)),
            (None, None) => enumerate_partitions(args.n, |_| true),
        };
        list.iter().map(ToString::to_string).collect()
    };
    match (args.count, args.format) {
        (true, Format::Json) => println!("{}", json!({"n": args.n, "count": items.len()})),
        (true, _) => println!("{}", items.len()),
        (false, Format::Json) => println!("{}", json!(items)),
        (false, _) => {
            for item in &items {
                println!("{item}");
            }
        }
    }
    Ok(Outcome::Ok)
}

fn coeff_json(c: &BigInt) -> Value {
    i64::try_from(c).map_or_else(|_| json!(c.to_string()), |v| json!(v))
}

fn series(args: SeriesArgs) -> Result<Outcome> {
    ensure!(args.k >= 1, "--k must be at least 1");
    let n = args.order;
    let (names, forms): (Vec<&str>, Vec<Series>) = match args.l {
        Some(l) => {
            ensure!(l >= 1, "--l must be at least 1");
            (
                vec!["product_kl", "product_lk", "eta_quotient"],
                vec![
                    regular_product_side(args.k, l, n),
                    regular_product_side(l, args.k, n),
                    eta_quotient_side(args.k, l, n),
                ],
            )
        }
        None => {
            let g = glaisher_series(args.k, n);
            (
                vec!["regular_parts", "eta_quotient", "bounded_multiplicity"],
                vec![g.regular_parts, g.eta_quotient, g.bounded_multiplicity],
            )
        }
    };
    let agree = forms.windows(2).all(|w| w[0] == w[1]);
    match args.format {
        Format::Human => {
            for (name, s) in names.iter().zip(&forms) {
                println!("{name}: {s}");
            }
            println!("{}", if agree { "PASS forms agree" } else { "FAIL forms differ" });
        }
        Format::Tsv => {
            println!("n\t{}", names.join("\t"));
            for i in 0..=n {
                let row: Vec<String> = forms.iter().map(|s| s.coeff(i).to_string()).collect();
                println!("{i}\t{}", row.join("\t"));
            }
        }
        Format::Json => {
            let mut v = json!({"k": args.k, "l": args.l, "order": n, "agree": agree});
            for (name, s) in names.iter().zip(&forms) {
                v[*name] = Value::Array(s.coeffs().iter().map(coeff_json).collect());
            }
            println!("{v}");
        }
    }
    Ok(if agree { Outcome::Ok } else { Outcome::Failed })
}

fn verify(args: VerifyArgs) -> Result<Outcome> {
    ensure!(args.kl_max >= 2, "--kl-max must be at least 2");
    let all = !(args.bijection || args.series || args.counts || args.glaisher || args.mixed_radix);
    let kls: Vec<u64> = (2..=args.kl_max).collect();
    let mut outcomes: Vec<SweepOutcome> = Vec::new();
    if all || args.bijection {
        let strategies = [Strategy::Prime, Strategy::Optimal];
        outcomes.push(verify_bijection(&kls, &kls, args.n_max, &strategies));
    }
    if all || args.series {
        outcomes.push(verify_series(args.series_kl_max, args.order));
    }
    if all || args.counts {
        outcomes.push(verify_series_counts(&kls, &kls, args.n_max));
    }
    if all || args.glaisher {
        let ks: Vec<u64> = (2..=args.kl_max + 1).collect();
        outcomes.push(verify_glaisher(&ks, args.n_max, args.policies, args.seed));
    }
    if all || args.mixed_radix {
        outcomes.push(verify_mixed_radix(&RADIX_POOL, 5, args.max_product));
    }
    let mut ok = true;
    for o in &outcomes {
        println!("{}", o.summary());
        for f in &o.failures {
            println!("  {f}");
        }
        ok &= o.passed();
    }
    Ok(if ok { Outcome::Ok } else { Outcome::Failed })
}

fn table(args: TableArgs) -> Result<Outcome> {
    positive("k", args.k)?;
    positive("l", args.l)?;
    let strategy = strategy(&args.strategy, args.k, args.l)?;
    let rows = bijection_table(args.k, args.l, args.n, &strategy)?;
    match args.format {
        Format::Human => print!("{}", render_human(&rows)),
        Format::Tsv => print!("{}", render_tsv(&rows)),
        Format::Json => println!("{}", serde_json::to_string_pretty(&rows)?),
    }
    Ok(Outcome::Ok)
}

fn companions(args: CompanionArgs) -> Result<Outcome> {
    let variants = match &args.variant {
        Some(name) => {
            let v: Variant = name.parse()?;
            if v.k() != args.k {
                bail!("variant `{v}` pairs with k={}, not k={}", v.k(), args.k);
            }
            vec![v]
        }
        None => Variant::for_k(args.k),
    };
    let mut ok = true;
    for v in variants {
        let report = equinumerosity_report(args.n_max, v);
        print!("{}", report.render_tsv());
        ok &= report.passed();
    }
    Ok(if ok { Outcome::Ok } else { Outcome::Failed })
}

fn factorize(args: FactorizeArgs) -> Result<Outcome> {
    positive("k", args.k)?;
    positive("l", args.l)?;
    let prime = prime_factorization(args.k, args.l)?;
    let optimal = optimal_factorization(args.k, args.l)?;
    match args.format {
        Format::Human => {
            println!("prime: {prime}");
            println!("optimal: {optimal}");
        }
        Format::Tsv => {
            println!("strategy\tk_factors\tl_factors");
            for (name, cf) in [("prime", &prime), ("optimal", &optimal)] {
                println!("{name}\t{}\t{}", cf.k_factors(), cf.l_factors());
            }
        }
        Format::Json => {
            let cf_json = |cf: &CompatibleFactorization| {
                json!({"k": cf.k_factors().factors(), "l": cf.l_factors().factors()})
            };
            println!(
                "{}",
                json!({"k": args.k, "l": args.l, "prime": cf_json(&prime), "optimal": cf_json(&optimal)})
            );
        }
    }
    Ok(Outcome::Ok)
}

fn order_report(args: OrderReportArgs) -> Result<Outcome> {
    positive("k", args.k)?;
    positive("l", args.l)?;
    let r = order_dependence_report(args.k, args.l, args.n_max)?;
    println!(
        "k={} l={} n<={}: {} x {} orderings, {} partitions, {} mismatching images",
        r.k, r.l, r.n_max, r.k_orderings, r.l_orderings, r.partitions_checked, r.mismatch_count
    );
    for m in &r.examples {
        println!(
            "{}\t{:?}/{:?}\t{}\t{}",
            m.lambda, m.k_factors, m.l_factors, m.baseline, m.image
        );
    }
    println!(
        "{}",
        if r.images_coincide() {
            "images independent of factor order"
        } else {
            "images depend on factor order"
        }
    );
    Ok(Outcome::Ok)
}
