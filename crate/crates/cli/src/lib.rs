//! Batch front end for `hopfkit-core`: a JSON document format, verification
//! verbs and deterministic reports.

pub mod commands;
pub mod document;
mod error;

use std::path::PathBuf;

use clap::Parser;
use hopfkit_core::catalog::{self, Entry};
use serde_json::json;

pub use commands::{run_command, Options, Outcome, Verb, EXIT_ERROR, EXIT_FALSE, EXIT_TRUE};
pub use document::{parse_document, serialize_document, to_canonical_string, Document};
pub use error::CliError;

#[derive(Debug, Parser)]
#[command(name = "hopfkit", version, about = "Exact verification of Hopf algebras, coactions and quantum principal bundles")]
pub struct Args {
    /// check-hopf, check-coaction, hopf-image, inner-faithful, coinvariants, galois,
    /// qpb-check, reduce, cosemisimple, reduce-morphism, equivalent, or catalog
    pub verb: String,
    /// Input document (for `catalog`: the entry name, e.g. "group Z6")
    pub file: String,
    /// Object to act on when the document holds several candidates
    #[arg(long)]
    pub object: Option<String>,
    /// Subspace object used as the seed of `reduce`
    #[arg(long)]
    pub seed: Option<String>,
    /// Backward witness morphism for `equivalent`
    #[arg(long)]
    pub witness: Option<String>,
    /// Write the report here instead of stdout
    #[arg(long)]
    pub report: Option<PathBuf>,
    /// Field for `catalog`: Q or Fp:<prime>
    #[arg(long, default_value = "Q")]
    pub field: String,
}

fn catalog_document(name: &str, field: &str) -> Result<String, CliError> {
    let field = match field.strip_prefix("Fp:") {
        Some(p) => {
            let p: u64 = p.parse().map_err(|_| CliError::Usage(format!("bad field {field:?}")))?;
            hopfkit_core::linalg::Field::prime(p).map_err(|e| CliError::precondition("field", e))?
        }
        None if field == "Q" => hopfkit_core::linalg::Field::Rational,
        None => return Err(CliError::Usage(format!("bad field {field:?}; use Q or Fp:<prime>"))),
    };
    let entry = catalog::lookup(name, field).map_err(|e| CliError::precondition("catalog", e))?;
    let (value, f) = match &entry {
        Entry::Hopf(h) => (document::hopf_value(h), h.field()),
        Entry::Algebra(a) => (document::algebra_value(a), a.field()),
    };
    let key = name.replace(' ', "_");
    let doc = json!({ "field": document::field_value(f), "objects": { key: value } });
    Ok(to_canonical_string(&doc))
}

/// Runs one invocation; returns the report text and exit code.
pub fn run(args: &Args) -> Result<(String, i32), CliError> {
    if args.verb == "catalog" {
        return Ok((catalog_document(&args.file, &args.field)?, EXIT_TRUE));
    }
    let verb: Verb = args.verb.parse()?;
    let text = std::fs::read_to_string(&args.file).map_err(|source| CliError::Io { path: args.file.clone().into(), source })?;
    let doc = parse_document(&text)?;
    let opts = Options { object: args.object.clone(), seed: args.seed.clone(), witness: args.witness.clone() };
    let outcome = run_command(verb, &doc, &opts)?;
    Ok((to_canonical_string(&outcome.document), outcome.exit_code))
}
