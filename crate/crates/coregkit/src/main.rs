use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use coregkit::codim::{run_codim, CodimFile};
use coregkit::ops::{fan_report, germ_arg, run_op};
use coregkit::{run_scenario, table_query, verify_builtin, CoregError, Filter, Report, Verdict};
use dualcx::{toric::toric_fano, Fan};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "coregkit", version, about = "Exact computations for coregularity of log Calabi-Yau pairs")]
struct Cli {
    /// Machine-readable JSON output.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Log canonical threshold of a germ, or its weighted bound.
    Lct {
        #[arg(long)]
        germ: String,
        #[arg(long, value_delimiter = ',')]
        weights: Option<Vec<i64>>,
        /// Fail unless the value is exact.
        #[arg(long)]
        exact: bool,
        #[arg(long)]
        nvars: Option<usize>,
    },
    /// Splitting lemma, cubic type and strictly lc screens of a 3-variable germ.
    Classify {
        #[arg(long)]
        germ: String,
    },
    /// Regularity of the dual complex of an snc configuration file.
    Dualcx { file: PathBuf },
    /// Regularity of the toric boundary of a fan file or a toric family.
    Toric {
        fanfile: Option<PathBuf>,
        #[arg(long, conflicts_with = "fanfile")]
        family: Option<String>,
    },
    /// Blow-up of a rational curve with normal bundle O(a)+O(b).
    Blowup {
        #[arg(long, value_delimiter = ',', num_args = 1, allow_hyphen_values = true)]
        normal: Vec<i64>,
        #[arg(long, allow_hyphen_values = true)]
        ldot: i64,
    },
    /// Singular members of y^2 = x^3 + f4 x + f6 on a degree 1 del Pezzo surface.
    Dp1 {
        #[arg(long)]
        f4: String,
        #[arg(long)]
        f6: String,
    },
    /// Codimension chain from a codim file.
    Codim {
        #[arg(long)]
        scenario: PathBuf,
    },
    /// Run scenario files; exit 1 if an expectation fails.
    Run {
        #[arg(required = true)]
        files: Vec<PathBuf>,
    },
    /// Query the family catalog.
    Table {
        #[arg(long)]
        id: Option<String>,
        #[arg(long)]
        rank: Option<u32>,
        #[arg(long, value_delimiter = ',')]
        verdict: Vec<Verdict>,
        #[arg(long)]
        toric: Option<bool>,
    },
    /// Re-run the encoded construction for a family.
    Verify {
        #[arg(required_unless_present = "all")]
        id: Option<String>,
        #[arg(long)]
        all: bool,
    },
}

fn read_json(path: &PathBuf) -> Result<Value, CoregError> {
    let text = std::fs::read_to_string(path).map_err(|e| CoregError::Input(format!("{}: {e}", path.display())))?;
    Ok(serde_json::from_str(&text)?)
}

fn emit(json_out: bool, v: &Value, text: impl FnOnce(&Value) -> String) {
    if json_out {
        println!("{}", serde_json::to_string_pretty(v).expect("serializable"));
    } else {
        print!("{}", text(v));
    }
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("serializable") + "\n"
}

fn reg_text(v: &Value) -> String {
    let mut s = format!("reg {}  coreg {}  cells {}  euler {}\n", v["reg"], v["coreg"], v["cells"], v["euler"]);
    if let Some(t) = v["topology"].as_str() {
        s.push_str(t);
        s.push('\n');
    }
    s
}

fn run(cli: Cli) -> Result<i32, CoregError> {
    let j = cli.json;
    match cli.cmd {
        Cmd::Lct { germ, weights, exact, nvars } => {
            let mut args = json!({ "germ": germ, "nvars": nvars });
            let op = match weights {
                Some(w) => {
                    args["weights"] = json!(w);
                    "weighted_bound"
                }
                None if germ_arg(&args, "germ")?.nvars() == 2 => "curve_lct",
                None => "weight_search",
            };
            let v = run_op(op, &args, 0)?;
            emit(j, &v, |v| {
                format!(
                    "lct {} ({})\n{}\n",
                    v["value"].as_str().unwrap_or("?"),
                    v["kind"].as_str().unwrap_or("?"),
                    v["certificate"].as_str().unwrap_or("")
                )
            });
            if exact && v["kind"] != "Exact" {
                eprintln!("value is only a bound");
                return Ok(1);
            }
        }
        Cmd::Classify { germ } => {
            let args = json!({ "germ": germ, "nvars": 3 });
            let g = germ_arg(&args, "germ")?;
            let cubic = g.taylor_component(3)?;
            let mut v = json!({
                "split": run_op("hessian_split", &args, 0)?,
                "lc1": run_op("lc1_screen", &args, 0)?,
                "lc2": run_op("lc2_screen", &args, 0)?,
            });
            if !cubic.is_zero() {
                v["cubic"] = run_op("classify_cubic", &json!({ "germ": cubic.to_string(), "nvars": 3 }), 0)?;
            }
            emit(j, &v, pretty);
        }
        Cmd::Dualcx { file } => {
            let v = run_op("dualcx", &json!({ "config": read_json(&file)? }), 0)?;
            emit(j, &v, reg_text);
        }
        Cmd::Toric { fanfile, family } => {
            let fan: Fan = match (fanfile, family) {
                (Some(f), None) => serde_json::from_value(read_json(&f)?)?,
                (None, Some(id)) => {
                    toric_fano(&id).ok_or_else(|| CoregError::Input(format!("{id} is not a toric family")))?
                }
                _ => return Err(CoregError::Input("give a fan file or --family".into())),
            };
            let v = fan_report(&fan)?;
            emit(j, &v, reg_text);
        }
        Cmd::Blowup { normal, ldot } => {
            if normal.len() != 2 {
                return Err(CoregError::Input("--normal takes a,b".into()));
            }
            let v = run_op("curve_blowup", &json!({ "normal": normal, "ldot": ldot }), 0)?;
            emit(j, &v, |v| {
                format!(
                    "E = F_{}  E|E ~ {}  D'|E ~ {}  E^3 = {}\n",
                    v["hirzebruch_index"],
                    v["e_self"]["class"].as_str().unwrap_or(""),
                    v["d_restrict"]["class"].as_str().unwrap_or(""),
                    v["e_cubed"]
                )
            });
        }
        Cmd::Dp1 { f4, f6 } => {
            let v = run_op("dp1", &json!({ "f4": f4, "f6": f6 }), 0)?;
            emit(j, &v, |v| {
                format!(
                    "nodal {}  cuspidal {}  other double {}  higher {}  total {}\n",
                    v["nodal"], v["cusp"], v["other_double"], v["higher"], v["total"]
                )
            });
        }
        Cmd::Codim { scenario } => {
            let file: CodimFile = serde_json::from_value(read_json(&scenario)?)?;
            let r = run_codim(&file)?;
            let v = serde_json::to_value(&r)?;
            emit(j, &v, |_| {
                let mut s = format!("{} ({})\n", r.name, r.citation);
                for l in &r.loci {
                    s.push_str(&format!(
                        "  {:<45} codim {:>2}  offset {}  on f {}\n",
                        l.name, l.codim, l.offset, l.on_f
                    ));
                }
                s
            });
            return Ok(if r.ok() { 0 } else { 1 });
        }
        Cmd::Run { files } => {
            // scenarios are independent: run them side by side, report in order
            let results: Vec<Result<Report, CoregError>> = std::thread::scope(|s| {
                let handles: Vec<_> = files.iter().map(|f| s.spawn(move || run_scenario(f))).collect();
                handles.into_iter().map(|h| h.join().expect("scenario thread")).collect()
            });
            let mut code = 0;
            let mut reports = Vec::new();
            for (f, r) in files.iter().zip(results) {
                match r {
                    Ok(r) => {
                        code = code.max(r.exit_code());
                        if !j {
                            print!("{}", r.to_text());
                        }
                        reports.push(serde_json::to_value(&r)?);
                    }
                    Err(e) => {
                        eprintln!("{}: {e}", f.display());
                        code = 2;
                    }
                }
            }
            if j {
                println!("{}", serde_json::to_string_pretty(&reports)?);
            }
            return Ok(code);
        }
        Cmd::Table { id, rank, verdict, toric } => {
            let rows = table_query(&Filter { id, rank, verdicts: verdict, toric })?;
            let v = serde_json::to_value(&rows)?;
            emit(j, &v, |_| {
                let mut s = String::new();
                for f in &rows {
                    let deg = f.degree.map_or("-".to_string(), |d| d.to_string());
                    s.push_str(&format!(
                        "{:<5} rho {:<2} index {} -K^3 {:<3} {:<24}{}\n",
                        f.id,
                        f.picard_rank,
                        f.index,
                        deg,
                        f.verdict.to_string(),
                        if f.toric { " toric" } else { "" }
                    ));
                }
                s.push_str(&format!("{} families\n", rows.len()));
                s
            });
        }
        Cmd::Verify { id, all } => {
            let ids: Vec<String> = if all {
                coregkit::catalog().families.iter().map(|f| f.id.clone()).collect()
            } else {
                id.into_iter().collect()
            };
            let mut code = 0;
            let mut out = Vec::new();
            for id in ids {
                match verify_builtin(&id) {
                    Ok(r) => {
                        if !r.pass {
                            code = 1;
                        }
                        if !j {
                            let coreg: Vec<String> = r.boundaries.iter().map(|b| b.report.coreg.to_string()).collect();
                            println!(
                                "{:<5} {:<20} {:?} {}{}",
                                r.id,
                                format!("{:?}", r.status),
                                r.verdict,
                                if r.pass { "pass" } else { "FAIL" },
                                if coreg.is_empty() {
                                    String::new()
                                } else {
                                    format!("  coreg [{}]", coreg.join(", "))
                                }
                            );
                        }
                        out.push(serde_json::to_value(&r)?);
                    }
                    Err(e @ CoregError::NotEncodable { .. }) => {
                        if !j {
                            println!("{id:<5} not encodable: {e}");
                        }
                        out.push(json!({ "id": id, "not_encodable": e.to_string() }));
                    }
                    Err(e) => return Err(e),
                }
            }
            if j {
                println!("{}", serde_json::to_string_pretty(&out)?);
            }
            return Ok(code);
        }
    }
    Ok(0)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
