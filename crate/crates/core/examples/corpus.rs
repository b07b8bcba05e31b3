//! Runs the built-in corpus of worked examples and prints the table.

use toric_rigidity::io::corpus::inventory;
use toric_rigidity::io::report::corpus_table;
use toric_rigidity::io::{run_corpus, CorpusSource};

fn main() -> anyhow::Result<()> {
    for (kind, files) in inventory() {
        println!("{kind}: {}", files.len());
    }
    let report = run_corpus(&CorpusSource::Embedded).map_err(anyhow::Error::msg)?;
    print!("{}", corpus_table(&report, false));
    anyhow::ensure!(report.all_pass(), "{} corpus cases failed", report.failures());
    Ok(())
}
