use std::process::ExitCode;
use std::sync::Arc;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};

use adams_core::adams;
use adams_core::spectra::{self, SpectrumId};
use adams_core::{render, verify};
use adams_core::{RODegree, Window};

#[derive(Parser)]
#[command(name = "adams", version, about = "Exact RO(C2)-graded homotopy and Adams operations for kR, KR, tmf1(3), TMF1(3)")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Group structure and basis in one degree.
    Group {
        #[arg(long)]
        spectrum: String,
        /// Degree as `a+bs` or `a-bs`.
        #[arg(long, allow_hyphen_values = true)]
        degree: String,
    },
    /// Apply psi^k to an element; k is inverted first if needed.
    Act {
        #[arg(long)]
        spectrum: String,
        #[arg(long, allow_hyphen_values = true)]
        k: i64,
        #[arg(long, allow_hyphen_values = true)]
        element: String,
    },
    /// Print the chart of a spectrum.
    Chart {
        #[arg(long)]
        spectrum: String,
        /// `AMIN:AMAX,BMIN:BMAX` or a bare `N`.
        #[arg(long, allow_hyphen_values = true)]
        window: Option<String>,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Run the verification suite.
    Verify {
        /// A spectrum name or `all`.
        #[arg(long, default_value = "all")]
        spectrum: String,
        /// Comma-separated list of k.
        #[arg(long, allow_hyphen_values = true, value_delimiter = ',', default_values_t = verify::DEFAULT_KS)]
        k: Vec<i64>,
        #[arg(long, allow_hyphen_values = true, default_value = "-12:12,-12:12")]
        window: String,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Ascii,
}

fn spectrum(name: &str) -> Result<SpectrumId> {
    Ok(name.parse::<SpectrumId>()?)
}

fn group(name: &str, degree: &str) -> Result<String> {
    let p = spectra::builtin(spectrum(name)?)?;
    let d: RODegree = degree.parse()?;
    Ok(render::group_line(&p, p.chart.cell(&d)?))
}

fn act(name: &str, k: i64, element: &str) -> Result<(String, Option<String>)> {
    let base = spectra::builtin(spectrum(name)?)?;
    let note = (!base.is_inverted(k)).then(|| format!("inverted {}", k.abs()));
    let p = Arc::new(spectra::invert_integer(&base, k)?);
    let op = adams::make_adams(k, &p)?;
    let x = p.parse_element(element)?;
    Ok((p.format_element(&op.apply(&x)), note))
}

fn chart(name: &str, window: Option<&str>, format: Format) -> Result<String> {
    let p = spectra::builtin(spectrum(name)?)?;
    let window = match window {
        Some(w) => Window::parse(w)?,
        None => p.chart.window,
    };
    if !window.is_within(&p.chart.window) {
        bail!("window {window} exceeds the chart window {}", p.chart.window);
    }
    Ok(match format {
        Format::Csv => render::chart_csv(&p, &window),
        Format::Ascii => render::chart_ascii(&p, &window),
    })
}

fn run_verify(name: &str, ks: &[i64], window: &str) -> Result<(String, bool)> {
    let ids: Vec<SpectrumId> = if name == "all" {
        SpectrumId::ALL.to_vec()
    } else {
        name.split(',').map(spectrum).collect::<Result<_>>()?
    };
    let window = Window::parse(window)?;
    let start = std::time::Instant::now();
    let report = verify::run_suite(&ids, ks, &window).context("verification aborted")?;
    eprintln!("{} in {:.2?}", report.summary(), start.elapsed());
    Ok((report.render(), report.passed()))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Group { spectrum, degree } => group(spectrum, degree).map(|s| (s, true)),
        Command::Act { spectrum, k, element } => act(spectrum, *k, element).map(|(s, note)| {
            if let Some(n) = note {
                eprintln!("{n}");
            }
            (s, true)
        }),
        Command::Chart { spectrum, window, format } => chart(spectrum, window.as_deref(), *format).map(|s| (s, true)),
        Command::Verify { spectrum, k, window } => run_verify(spectrum, k, window),
    };
    match result {
        Ok((text, ok)) => {
            print!("{text}");
            if !text.ends_with('\n') {
                println!();
            }
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
