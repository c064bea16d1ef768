//! `picert` — deterministic command-line front end.
//!
//! Every command is a scriptable one-liner emitting CSV (default) or an
//! aligned markdown table; identical invocations produce byte-identical
//! output. Exit status: 0 on success, 1 on domain/validation errors
//! (diagnostic on stderr), 2 when a verification reports failures.

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use picert_core::area_pi::{self, PiEnclosure};
use picert_core::convergence::{self, Scheme};
use picert_core::interval::Interval;
use picert_core::report::{csv_line, fmt_f64, markdown_table};
use picert_core::squeeze;
use picert_core::Result;
use std::process::ExitCode;

/// Grid used by `verify --theorem 2`.
const ANGLE_BOUNDS_DOMAIN: (f64, f64) = (1e-6, 1.5);
/// Grid used by `verify --theorem 1`.
const CHAIN_DOMAIN: (f64, f64) = (1e-3, 1.5);
/// Enclosure width backing the area commands.
const DEFAULT_PI_WIDTH: f64 = 1e-10;

#[derive(Parser)]
#[command(
    name = "picert",
    version,
    about = "Certified enclosures of pi, circle areas, and the inequalities behind them"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Md,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum SchemeArg {
    Inscribed,
    Trapezoid,
}

#[derive(Subcommand)]
enum Command {
    /// Two-sided enclosure of pi no wider than the requested width
    Pi {
        /// Target enclosure width (>= 1e-12)
        #[arg(long)]
        width: f64,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Approximation table for an area scheme, one row per doubling
    Table {
        #[arg(long, value_enum)]
        scheme: SchemeArg,
        /// Last doubling index (0..=30)
        #[arg(long)]
        kmax: u32,
        #[arg(long, default_value_t = 1.0)]
        radius: f64,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Grid verification: 1 = chain 1 < t/sin t < sec t + tan(t/2) on
    /// [1e-3, 1.5]; 2 = sin t < t < tan t on [1e-6, 1.5]
    Verify {
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=2))]
        theorem: u8,
        /// Grid cells (theorem 2) or sample points (theorem 1)
        #[arg(long)]
        cells: u64,
        /// Bisection depth for failing cells (theorem 2 only)
        #[arg(long, default_value_t = 12)]
        max_depth: u32,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Certified epsilon-delta witness for sin(t)/t -> 1
    Sinc {
        #[arg(long)]
        epsilon: f64,
    },
    /// Certified circle area pi R^2
    Area {
        #[arg(long)]
        radius: f64,
    },
    /// Annulus area, unrolled-trapezoid route and direct route
    Annulus {
        /// Outer radius
        #[arg(long = "R")]
        outer: f64,
        /// Inner radius
        #[arg(long = "r")]
        inner: f64,
    },
    /// Sector area (1/2) theta R^2, downstream of the certified pi
    Sector {
        #[arg(long)]
        theta: f64,
        #[arg(long)]
        radius: f64,
    },
}

/// Rendered output plus whether every verification in it succeeded.
struct Rendered {
    text: String,
    verified: bool,
}

fn ok(text: String) -> Result<Rendered> {
    Ok(Rendered {
        text,
        verified: true,
    })
}

fn table_text(format: Format, header: &[&str], rows: Vec<Vec<String>>) -> String {
    match format {
        Format::Csv => {
            let mut out = csv_line(&header.iter().map(|s| s.to_string()).collect::<Vec<_>>());
            for row in rows {
                out.push_str(&csv_line(&row));
            }
            out
        }
        Format::Md => markdown_table(header, &rows),
    }
}

fn default_pi() -> Result<PiEnclosure> {
    area_pi::pi_enclosure(DEFAULT_PI_WIDTH)
}

fn run(command: &Command) -> Result<Rendered> {
    match command {
        Command::Pi { width, format } => {
            let pi = area_pi::pi_enclosure(*width)?;
            let row = vec![
                pi.k_used.to_string(),
                pi.n().to_string(),
                fmt_f64(pi.value.lo()),
                fmt_f64(pi.value.hi()),
                fmt_f64(pi.width),
            ];
            ok(table_text(
                *format,
                &["k_used", "n", "lo", "hi", "width"],
                vec![row],
            ))
        }
        Command::Table {
            scheme,
            kmax,
            radius,
            format,
        } => {
            let scheme = match scheme {
                SchemeArg::Inscribed => Scheme::Inscribed,
                SchemeArg::Trapezoid => Scheme::Trapezoid,
            };
            let records = convergence::sequence_table(scheme, *kmax, *radius)?;
            let rows: Vec<Vec<String>> = records
                .iter()
                .enumerate()
                .map(|(k, r)| {
                    let mut row = vec![k.to_string()];
                    row.extend(r.csv_fields());
                    row
                })
                .collect();
            ok(table_text(
                *format,
                &[
                    "k",
                    "n",
                    "value_lo",
                    "value_hi",
                    "abs_error_bound",
                    "local_order",
                ],
                rows,
            ))
        }
        Command::Verify {
            theorem,
            cells,
            max_depth,
            format,
        } => {
            let summary = match theorem {
                1 => {
                    let domain = Interval::new(CHAIN_DOMAIN.0, CHAIN_DOMAIN.1)?;
                    squeeze::verify_chain_grid(domain, *cells)?
                }
                _ => {
                    let domain = Interval::new(ANGLE_BOUNDS_DOMAIN.0, ANGLE_BOUNDS_DOMAIN.1)?;
                    squeeze::verify_angle_bounds(domain, *cells, *max_depth)?
                }
            };
            let text = table_text(
                *format,
                &[
                    "domain_lo",
                    "domain_hi",
                    "cells",
                    "verified_cells",
                    "max_refinement_depth",
                    "worst_margin",
                ],
                vec![summary.csv_fields()],
            );
            Ok(Rendered {
                text,
                verified: summary.all_verified(),
            })
        }
        Command::Sinc { epsilon } => {
            let w = squeeze::sinc_squeeze_limit(*epsilon)?;
            let c = &w.certificate;
            let row = vec![
                fmt_f64(*epsilon),
                fmt_f64(w.delta),
                fmt_f64(c.lower.lo()),
                fmt_f64(c.lower.hi()),
                fmt_f64(c.ratio.lo()),
                fmt_f64(c.ratio.hi()),
                fmt_f64(c.upper.lo()),
                fmt_f64(c.upper.hi()),
                c.verified.to_string(),
                fmt_f64(c.margin),
            ];
            let text = table_text(
                Format::Csv,
                &[
                    "epsilon", "delta", "lower_lo", "lower_hi", "ratio_lo", "ratio_hi", "upper_lo",
                    "upper_hi", "verified", "margin",
                ],
                vec![row],
            );
            Ok(Rendered {
                text,
                verified: c.verified,
            })
        }
        Command::Area { radius } => {
            let area = area_pi::circle_area(*radius, &default_pi()?)?;
            let row = vec![
                fmt_f64(*radius),
                fmt_f64(area.lo()),
                fmt_f64(area.hi()),
                fmt_f64(area.width()),
            ];
            ok(table_text(
                Format::Csv,
                &["radius", "lo", "hi", "width"],
                vec![row],
            ))
        }
        Command::Annulus { outer, inner } => {
            let areas = area_pi::annulus_area(*outer, *inner, &default_pi()?)?;
            let row = vec![
                fmt_f64(*outer),
                fmt_f64(*inner),
                fmt_f64(areas.unrolled.lo()),
                fmt_f64(areas.unrolled.hi()),
                fmt_f64(areas.direct.lo()),
                fmt_f64(areas.direct.hi()),
                areas.unrolled.overlaps(areas.direct).to_string(),
            ];
            ok(table_text(
                Format::Csv,
                &[
                    "R",
                    "r",
                    "unrolled_lo",
                    "unrolled_hi",
                    "direct_lo",
                    "direct_hi",
                    "overlap",
                ],
                vec![row],
            ))
        }
        Command::Sector { theta, radius } => {
            let area = area_pi::sector_area(*theta, *radius, &default_pi()?)?;
            let row = vec![
                fmt_f64(*theta),
                fmt_f64(*radius),
                fmt_f64(area.lo()),
                fmt_f64(area.hi()),
                fmt_f64(area.width()),
            ];
            ok(table_text(
                Format::Csv,
                &["theta", "radius", "lo", "hi", "width"],
                vec![row],
            ))
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // --help/--version are successes; anything else is a
            // validation failure on the error stream
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    print!("{e}");
                    ExitCode::SUCCESS
                }
                _ => {
                    eprint!("{e}");
                    ExitCode::from(1)
                }
            };
        }
    };
    match run(&cli.command) {
        Ok(r) => {
            print!("{}", r.text);
            if r.verified {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(2)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
