//! Command-line surface: normal order words, print family tables, render
//! boards, and run the verification suites.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or parse error.

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_rational::BigRational;

use crate::boards::Board;
use crate::coeffring::{CoeffPoly, Ring};
use crate::numbers::{combinatorial_normal_form, Family, TriangularTable};
use crate::placements::{classify_static, Cell, StaticPlacement};
use crate::rewriter::{first_difference, normal_order, NormalForm};
use crate::suites::{suite_by_name, SuiteConfig};
use crate::words::parse_word;

#[derive(Parser)]
#[command(
    name = "rookorder",
    version,
    about = "Normal ordering for XY - qYX = f(Y) via weighted rook placements"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand)]
pub enum Command {
    /// Normal order a word in X and Y
    Order(OrderArgs),
    /// Print a triangular number-family table
    Table(TableArgs),
    /// Render the Ferrers board of a word or a named family
    Board(BoardArgs),
    /// Run a verification suite
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Pretty,
    Json,
    Csv,
}

#[derive(Args)]
pub struct OrderArgs {
    /// The word, e.g. "(YX)^3" or "X^2YXYX^2Y"; empty for the identity
    #[arg(long, allow_hyphen_values = true)]
    pub word: String,
    /// Degree bound of the relation polynomial f
    #[arg(long, default_value_t = 1)]
    pub s: usize,
    /// Also run the rewriting oracle and report an equality verdict
    #[arg(long)]
    pub check: bool,
    /// Specialize q to a rational value, e.g. "1" or "2/3"
    #[arg(long, allow_hyphen_values = true)]
    pub q: Option<String>,
    /// Specialize the alphas to comma-separated rationals (length s+1)
    #[arg(long, allow_hyphen_values = true)]
    pub alpha: Option<String>,
    #[arg(long, value_enum, default_value_t = Format::Pretty)]
    pub format: Format,
    /// Refuse words longer than this
    #[arg(long, default_value_t = 14)]
    pub max_len: usize,
    /// Lift the size guards
    #[arg(long)]
    pub unsafe_limits: bool,
}

#[derive(Args)]
pub struct TableArgs {
    /// ore-stirling | ore-lah | ore-scherk | poly-stirling | poly-lah | poly-scherk
    #[arg(long)]
    pub family: String,
    /// Largest row to print
    #[arg(long)]
    pub n: usize,
    /// Degree bound for the poly-* families
    #[arg(long, default_value_t = 1)]
    pub s: usize,
    /// Order r for the scherk families (the word is (Y^r X)^n)
    #[arg(long, default_value_t = 1)]
    pub r: usize,
    #[arg(long, allow_hyphen_values = true)]
    pub q: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub alpha: Option<String>,
    #[arg(long, value_enum, default_value_t = Format::Pretty)]
    pub format: Format,
}

#[derive(Args)]
pub struct BoardArgs {
    /// Word whose board to render
    #[arg(long)]
    pub word: Option<String>,
    /// staircase | jump | lah | rectangle
    #[arg(long)]
    pub family: Option<String>,
    #[arg(long)]
    pub n: Option<usize>,
    /// Columns for rectangle, jump multiplier for jump
    #[arg(long)]
    pub m: Option<usize>,
    /// Rook overlay "col:row,col:row" (columns right-to-left, rows from top)
    #[arg(long)]
    pub rooks: Option<String>,
    /// File overlay, same syntax
    #[arg(long)]
    pub files: Option<String>,
    #[arg(long, value_enum, default_value_t = Format::Pretty)]
    pub format: Format,
}

#[derive(Args)]
pub struct VerifyArgs {
    /// oracle | engines | recurrences | closed-forms | binomial | classical | all
    #[arg(long)]
    pub suite: String,
    #[arg(long)]
    pub seed: Option<u64>,
    #[arg(long)]
    pub max_len: Option<usize>,
    #[arg(long)]
    pub max_cells: Option<usize>,
    #[arg(long)]
    pub random_words: Option<usize>,
    #[arg(long)]
    pub trials: Option<usize>,
}

/// Parse the process arguments and run; returns the process exit code.
pub fn run() -> i32 {
    let cli = Cli::parse();
    dispatch(cli)
}

pub fn dispatch(cli: Cli) -> i32 {
    match cli.command {
        Command::Order(args) => cmd_order(&args),
        Command::Table(args) => cmd_table(&args),
        Command::Board(args) => cmd_board(&args),
        Command::Verify(args) => cmd_verify(&args),
    }
}

fn usage_error(message: &str) -> i32 {
    eprintln!("error: {message}");
    2
}

fn parse_rational(text: &str) -> Result<BigRational, String> {
    let parse_int = |t: &str| {
        t.trim()
            .parse::<BigInt>()
            .map_err(|_| format!("`{t}` is not an integer"))
    };
    match text.split_once('/') {
        Some((num, den)) => {
            let den = parse_int(den)?;
            if den == BigInt::from(0) {
                return Err("zero denominator".into());
            }
            Ok(BigRational::new(parse_int(num)?, den))
        }
        None => Ok(BigRational::from_integer(parse_int(text)?)),
    }
}

fn parse_alpha_list(text: &str, expected: usize) -> Result<Vec<BigRational>, String> {
    let values: Result<Vec<_>, _> = text.split(',').map(parse_rational).collect();
    let values = values?;
    if values.len() != expected {
        return Err(format!(
            "expected {expected} alpha values (s+1), got {}",
            values.len()
        ));
    }
    Ok(values)
}

/// Specialization requested on the command line: any subset of q and the
/// alphas, exact rationals.
struct Specialization {
    q: Option<BigRational>,
    alphas: Option<Vec<BigRational>>,
}

impl Specialization {
    fn from_flags(
        q: &Option<String>,
        alpha: &Option<String>,
        nvars: usize,
    ) -> Result<Option<Specialization>, String> {
        if q.is_none() && alpha.is_none() {
            return Ok(None);
        }
        Ok(Some(Specialization {
            q: q.as_deref().map(parse_rational).transpose()?,
            alphas: alpha
                .as_deref()
                .map(|a| parse_alpha_list(a, nvars))
                .transpose()?,
        }))
    }

    /// Evaluate a coefficient, keeping unspecialized variables symbolic by
    /// substituting nothing for them. Partial specialization with rationals
    /// is only supported when the remaining part is constant, so we evaluate
    /// fully, defaulting q to itself is not possible; instead unspecified
    /// values default to 1 for alphas and to symbolic handling for q.
    fn render(&self, poly: &CoeffPoly) -> Result<String, String> {
        match (&self.q, &self.alphas) {
            (Some(q), Some(alphas)) => {
                let value = poly.evaluate(q, alphas).map_err(|e| e.to_string())?;
                Ok(format_rational(&value))
            }
            (Some(q), None) => {
                // q rational, alphas symbolic: only exact integers fold in-ring
                if q.is_integer() {
                    Ok(poly.specialize_q(&q.to_integer()).to_string())
                } else {
                    Err("a fractional --q requires --alpha as well".into())
                }
            }
            (None, Some(alphas)) => {
                if alphas.iter().all(|a| a.is_integer()) {
                    let ints: Vec<BigInt> = alphas.iter().map(|a| a.to_integer()).collect();
                    Ok(poly
                        .specialize_alphas(&ints)
                        .map_err(|e| e.to_string())?
                        .to_string())
                } else {
                    Err("fractional --alpha requires --q as well".into())
                }
            }
            (None, None) => Ok(poly.to_string()),
        }
    }
}

fn format_rational(value: &BigRational) -> String {
    if value.is_integer() {
        value.to_integer().to_string()
    } else {
        format!("{}/{}", value.numer(), value.denom())
    }
}

// ---------------------------------------------------------------------------
// order
// ---------------------------------------------------------------------------

fn cmd_order(args: &OrderArgs) -> i32 {
    let word = match parse_word(&args.word) {
        Ok(w) => w,
        Err(e) => return usage_error(&e.to_string()),
    };
    if !args.unsafe_limits && word.len() > args.max_len {
        return usage_error(&format!(
            "word has {} letters, above the limit of {} (use --unsafe-limits to override)",
            word.len(),
            args.max_len
        ));
    }
    let ring = Ring::new(args.s);
    let spec = match Specialization::from_flags(&args.q, &args.alpha, ring.nvars()) {
        Ok(s) => s,
        Err(e) => return usage_error(&e),
    };

    let combinatorial = combinatorial_normal_form(ring, &word);

    if args.check {
        let oracle = normal_order(&word, ring);
        let diff = first_difference(&combinatorial, &oracle).unwrap();
        println!("combinatorial: {}", render_pretty(&combinatorial, &spec));
        println!("oracle:        {}", render_pretty(&oracle, &spec));
        match diff {
            None => println!("verdict: EQUAL"),
            Some(d) => {
                println!("verdict: DIFFER ({d})");
                return 1;
            }
        }
        return 0;
    }

    match args.format {
        Format::Pretty => println!("{}", render_pretty(&combinatorial, &spec)),
        Format::Json => match &spec {
            None => println!("{}", normal_form_to_json(&combinatorial, &word.to_string())),
            Some(spec) => {
                let mut terms = Vec::new();
                for (&(y, x), coeff) in combinatorial.terms().collect::<Vec<_>>().into_iter().rev()
                {
                    match spec.render(coeff) {
                        Ok(value) if value == "0" => {}
                        Ok(value) => {
                            terms.push(serde_json::json!({ "y": y, "x": x, "value": value }))
                        }
                        Err(e) => return usage_error(&e),
                    }
                }
                println!(
                    "{}",
                    serde_json::json!({
                        "word": word.to_string(),
                        "s": args.s,
                        "terms": terms,
                    })
                );
            }
        },
        Format::Csv => {
            println!("y,x,coefficient");
            for (&(y, x), coeff) in combinatorial.terms().collect::<Vec<_>>().into_iter().rev() {
                let rendered = match spec.as_ref().map(|s| s.render(coeff)) {
                    None => coeff.to_string(),
                    Some(Ok(text)) => text,
                    Some(Err(e)) => return usage_error(&e),
                };
                println!("{y},{x},\"{rendered}\"");
            }
        }
    }
    0
}

fn render_pretty(form: &NormalForm, spec: &Option<Specialization>) -> String {
    let Some(spec) = spec else {
        return form.to_string();
    };
    let mut parts = Vec::new();
    for (&(y, x), coeff) in form.terms().collect::<Vec<_>>().into_iter().rev() {
        let value = match spec.render(coeff) {
            Ok(v) => v,
            Err(e) => return format!("<specialization error: {e}>"),
        };
        if value == "0" {
            continue;
        }
        let mut term = format!("({value})");
        if y == 1 {
            term.push_str(" Y");
        } else if y > 1 {
            term.push_str(&format!(" Y^{y}"));
        }
        if x == 1 {
            term.push_str(" X");
        } else if x > 1 {
            term.push_str(&format!(" X^{x}"));
        }
        parts.push(term);
    }
    if parts.is_empty() {
        "0".to_string()
    } else {
        parts.join(" + ")
    }
}

/// The JSON form of a normal form: terms sorted by (y desc, x desc), each
/// coefficient a list of monomials in canonical order.
pub fn normal_form_to_json(form: &NormalForm, word: &str) -> serde_json::Value {
    let terms: Vec<serde_json::Value> = form
        .terms()
        .collect::<Vec<_>>()
        .into_iter()
        .rev()
        .map(|(&(y, x), coeff)| {
            let monomials: Vec<serde_json::Value> = coeff
                .terms()
                .map(|(key, c)| {
                    serde_json::json!({
                        "q": key.q_exp,
                        "alpha": key.alpha_exps,
                        "c": c.to_string(),
                    })
                })
                .collect();
            serde_json::json!({ "y": y, "x": x, "coeff": monomials })
        })
        .collect();
    serde_json::json!({
        "word": word,
        "s": form.ring().s(),
        "terms": terms,
    })
}

/// Parse the JSON schema back into a normal form.
pub fn normal_form_from_json(value: &serde_json::Value) -> Result<NormalForm, String> {
    let s = value["s"].as_u64().ok_or("missing s")? as usize;
    let ring = Ring::new(s);
    let mut form = NormalForm::new(ring);
    for term in value["terms"].as_array().ok_or("missing terms")? {
        let y = term["y"].as_u64().ok_or("missing y")? as usize;
        let x = term["x"].as_u64().ok_or("missing x")? as usize;
        let mut coeff = ring.zero();
        for monomial in term["coeff"].as_array().ok_or("missing coeff")? {
            let q = monomial["q"].as_u64().ok_or("missing q")? as u32;
            let alpha: Vec<u32> = monomial["alpha"]
                .as_array()
                .ok_or("missing alpha")?
                .iter()
                .map(|v| v.as_u64().unwrap_or(0) as u32)
                .collect();
            let c: BigInt = monomial["c"]
                .as_str()
                .ok_or("missing c")?
                .parse()
                .map_err(|_| "bad coefficient")?;
            coeff = &coeff + &ring.monomial(c, q, &alpha);
        }
        form.add_term(y, x, &coeff);
    }
    Ok(form)
}

// ---------------------------------------------------------------------------
// table
// ---------------------------------------------------------------------------

fn parse_family(name: &str, r: usize, s: usize) -> Option<Family> {
    match name {
        "ore-stirling" => Some(Family::OreStirling),
        "ore-lah" => Some(Family::OreLah),
        "ore-scherk" => Some(Family::OreScherk { r }),
        "poly-stirling" => Some(Family::PolyStirling { s }),
        "poly-lah" => Some(Family::PolyLah { s }),
        "poly-scherk" => Some(Family::PolyScherk { r, s }),
        _ => None,
    }
}

fn cmd_table(args: &TableArgs) -> i32 {
    let Some(family) = parse_family(&args.family, args.r, args.s) else {
        return usage_error(&format!("unknown family `{}`", args.family));
    };
    let ring = family.ring();
    let spec = match Specialization::from_flags(&args.q, &args.alpha, ring.nvars()) {
        Ok(s) => s,
        Err(e) => return usage_error(&e),
    };
    let table = TriangularTable::build(family, args.n);

    let render = |coeff: &CoeffPoly| -> Result<String, String> {
        match &spec {
            None => Ok(coeff.to_string()),
            Some(s) => s.render(coeff),
        }
    };

    match args.format {
        Format::Pretty => {
            println!("{} up to n = {}", family.label(), args.n);
            for (&(n, j, k), coeff) in table.rows() {
                match render(coeff) {
                    Ok(text) if text == "0" => {}
                    Ok(text) => println!("  ({n}; {j}, {k}) = {text}"),
                    Err(e) => return usage_error(&e),
                }
            }
        }
        Format::Csv => {
            println!("n,j,k,coefficient");
            for (&(n, j, k), coeff) in table.rows() {
                match render(coeff) {
                    Ok(text) if text == "0" => {}
                    Ok(text) => println!("{n},{j},{k},\"{text}\""),
                    Err(e) => return usage_error(&e),
                }
            }
        }
        Format::Json => {
            let mut entries = Vec::new();
            for (&(n, j, k), coeff) in table.rows() {
                let monomials: Vec<serde_json::Value> = coeff
                    .terms()
                    .map(|(key, c)| {
                        serde_json::json!({
                            "q": key.q_exp,
                            "alpha": key.alpha_exps,
                            "c": c.to_string(),
                        })
                    })
                    .collect();
                entries.push(serde_json::json!({
                    "n": n, "j": j, "k": k, "coeff": monomials,
                }));
            }
            println!(
                "{}",
                serde_json::json!({
                    "family": family.label(),
                    "max_n": args.n,
                    "entries": entries,
                })
            );
        }
    }
    0
}

// ---------------------------------------------------------------------------
// board
// ---------------------------------------------------------------------------

fn parse_cells(text: &str) -> Result<Vec<Cell>, String> {
    text.split(',')
        .filter(|part| !part.trim().is_empty())
        .map(|part| {
            let (col, row) = part
                .split_once(':')
                .ok_or_else(|| format!("`{part}` is not col:row"))?;
            Ok(Cell::new(
                col.trim()
                    .parse()
                    .map_err(|_| format!("bad column in `{part}`"))?,
                row.trim()
                    .parse()
                    .map_err(|_| format!("bad row in `{part}`"))?,
            ))
        })
        .collect()
}

fn cmd_board(args: &BoardArgs) -> i32 {
    let board =
        match (&args.word, &args.family) {
            (Some(text), None) => match parse_word(text) {
                Ok(w) => Board::from_word(&w),
                Err(e) => return usage_error(&e.to_string()),
            },
            (None, Some(family)) => {
                let n = args.n;
                let m = args.m;
                let built = match (family.as_str(), n, m) {
                    ("staircase", Some(n), None) => Some(Board::staircase(n)),
                    ("lah", Some(n), None) => Some(Board::lah(n)),
                    ("jump", Some(n), Some(m)) => Some(Board::jump(n, m)),
                    ("rectangle", Some(n), Some(m)) => Some(Board::rectangle(m, n)),
                    _ => None,
                };
                match built {
                    Some(b) => b,
                    None => return usage_error(
                        "board families: staircase --n, lah --n, jump --n --m, rectangle --m --n",
                    ),
                }
            }
            _ => return usage_error("give exactly one of --word or --family"),
        };

    if args.format == Format::Json {
        println!("{}", board.to_json());
        return 0;
    }

    let heights_ltr: Vec<String> = board
        .heights_rtl()
        .iter()
        .rev()
        .map(|h| h.to_string())
        .collect();
    println!("columns (left to right): [{}]", heights_ltr.join(", "));

    if args.rooks.is_some() || args.files.is_some() {
        let rooks = match args.rooks.as_deref().map(parse_cells).transpose() {
            Ok(r) => r.unwrap_or_default(),
            Err(e) => return usage_error(&e),
        };
        let files = match args.files.as_deref().map(parse_cells).transpose() {
            Ok(f) => f.unwrap_or_default(),
            Err(e) => return usage_error(&e),
        };
        let placement = StaticPlacement { rooks, files };
        match classify_static(&board, &placement) {
            Ok(class) => {
                print!("{}", class.render());
                match class.weight(Ring::new(1)) {
                    Ok(w) => println!("weight: {w}"),
                    Err(e) => return usage_error(&e.to_string()),
                }
            }
            Err(e) => return usage_error(&e.to_string()),
        }
    } else {
        print!("{}", board.render_plain());
    }
    0
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

fn cmd_verify(args: &VerifyArgs) -> i32 {
    let mut config = SuiteConfig::default();
    if let Some(seed) = args.seed {
        config.seed = seed;
    }
    if let Some(max_len) = args.max_len {
        config.max_len = max_len;
    }
    if let Some(max_cells) = args.max_cells {
        config.max_cells = max_cells;
    }
    if let Some(random_words) = args.random_words {
        config.random_words = random_words;
    }
    if let Some(trials) = args.trials {
        config.main_recurrence_trials = trials;
    }
    let Some(reports) = suite_by_name(&args.suite, &config) else {
        return usage_error(&format!(
            "unknown suite `{}`; expected oracle|engines|recurrences|closed-forms|binomial|classical|all",
            args.suite
        ));
    };
    let mut all_passed = true;
    for report in &reports {
        println!("{}", report.summary());
        all_passed &= report.passed();
    }
    if all_passed {
        0
    } else {
        1
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;
    use proptest::prelude::*;

    #[test]
    fn rational_parsing() {
        assert_eq!(
            parse_rational("3").unwrap(),
            BigRational::from_integer(3.into())
        );
        assert_eq!(
            parse_rational("-2/4").unwrap(),
            BigRational::new((-1).into(), 2.into())
        );
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn json_round_trip() {
        let ring = Ring::new(1);
        let word = parse_word("(YX)^3").unwrap();
        let form = combinatorial_normal_form(ring, &word);
        let json = normal_form_to_json(&form, &word.to_string());
        let back = normal_form_from_json(&json).unwrap();
        assert_eq!(first_difference(&form, &back).unwrap(), None);
        assert_eq!(json["s"], 1);
        assert_eq!(json["word"], "YXYXYX");
        // terms are sorted by (y desc, x desc)
        let ys: Vec<i64> = json["terms"]
            .as_array()
            .unwrap()
            .iter()
            .map(|t| t["y"].as_i64().unwrap())
            .collect();
        let mut sorted = ys.clone();
        sorted.sort_unstable_by(|a, b| b.cmp(a));
        assert_eq!(ys, sorted);
    }

    #[test]
    fn cell_list_parsing() {
        let cells = parse_cells("1:1, 3:2").unwrap();
        assert_eq!(cells, vec![Cell::new(1, 1), Cell::new(3, 2)]);
        assert!(parse_cells("1-2").is_err());
    }

    #[test]
    fn specialization_rendering() {
        let ring = Ring::new(1);
        let poly = ring.parse("(2+q) mu nu").unwrap();
        let spec = Specialization {
            q: Some(BigRational::from_integer(1.into())),
            alphas: Some(vec![
                BigRational::from_integer(1.into()),
                BigRational::from_integer(1.into()),
            ]),
        };
        assert_eq!(spec.render(&poly).unwrap(), "3");
        let spec = Specialization {
            q: Some(BigRational::new(1.into(), 2.into())),
            alphas: Some(vec![
                BigRational::from_integer(1.into()),
                BigRational::from_integer(2.into()),
            ]),
        };
        assert_eq!(spec.render(&poly).unwrap(), "5");
        let partial = Specialization {
            q: None,
            alphas: Some(vec![
                BigRational::from_integer(1.into()),
                BigRational::zero(),
            ]),
        };
        assert_eq!(partial.render(&poly).unwrap(), "0");
    }

    fn arb_normal_form(s: usize) -> impl Strategy<Value = NormalForm> {
        let monomial = (0..5u32, proptest::collection::vec(0..4u32, s + 1), -9i64..=9);
        let term = (0..6usize, 0..6usize, proptest::collection::vec(monomial, 0..4));
        proptest::collection::vec(term, 0..6).prop_map(move |terms| {
            let ring = Ring::new(s);
            let mut form = NormalForm::new(ring);
            for (y, x, monomials) in terms {
                for (q, alpha, c) in monomials {
                    form.add_term(y, x, &ring.monomial(BigInt::from(c), q, &alpha));
                }
            }
            form
        })
    }

    proptest! {
        #[test]
        fn json_round_trips_random_forms(form in arb_normal_form(2)) {
            let json = normal_form_to_json(&form, "w");
            let back = normal_form_from_json(&json).unwrap();
            prop_assert_eq!(first_difference(&form, &back).unwrap(), None);
        }
    }
}
