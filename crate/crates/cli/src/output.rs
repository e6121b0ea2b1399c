//! CSV renderings: header row plus one record per parameter tuple.
//! Nested values (coefficient vectors, cyclotomic numbers) are embedded as
//! their JSON serializations, so a CSV cell is still exact.

use anyhow::Result;
use begnum::certificate::{FullReport, IdentityCertificate, VerificationReport};
use begnum::tables::{CharactersDoc, FermionicDoc, NumbersDoc, PolyDoc, TwistedDoc};
use begnum::Cyclotomic;

fn writer() -> csv::Writer<Vec<u8>> {
    csv::WriterBuilder::new().from_writer(Vec::new())
}

fn finish(w: csv::Writer<Vec<u8>>) -> Result<String> {
    Ok(String::from_utf8(w.into_inner()?)?)
}

fn cyc_json(c: &Cyclotomic) -> String {
    serde_json::to_string(c).expect("cyclotomic serialization cannot fail")
}

fn cyc_vec_json(cs: &[Cyclotomic]) -> String {
    serde_json::to_string(cs).expect("cyclotomic serialization cannot fail")
}

fn rat_vec_json(rs: &[begnum::Rat]) -> String {
    serde_json::to_string(rs).expect("rational serialization cannot fail")
}

pub fn numbers_csv(doc: &NumbersDoc) -> Result<String> {
    let mut w = writer();
    w.write_record(["n", "bernoulli", "euler", "genocchi"])?;
    for row in &doc.rows {
        w.write_record([
            row.n.to_string(),
            row.bernoulli.to_string(),
            row.euler.to_string(),
            row.genocchi.to_string(),
        ])?;
    }
    finish(w)
}

pub fn poly_csv(doc: &PolyDoc) -> Result<String> {
    let mut w = writer();
    w.write_record(["n", "kind", "coeffs"])?;
    for row in &doc.rows {
        w.write_record([row.n.to_string(), "bernoulli".into(), rat_vec_json(&row.bernoulli)])?;
        w.write_record([row.n.to_string(), "euler".into(), rat_vec_json(&row.euler)])?;
        w.write_record([row.n.to_string(), "genocchi".into(), rat_vec_json(&row.genocchi)])?;
        if let Some(ge) = &row.gen_euler {
            w.write_record([row.n.to_string(), "gen_euler".into(), cyc_vec_json(ge)])?;
        }
    }
    finish(w)
}

pub fn chars_csv(doc: &CharactersDoc) -> Result<String> {
    let mut w = writer();
    w.write_record(["modulus", "index", "conductor", "parity", "values"])?;
    for c in &doc.characters {
        w.write_record([
            c.modulus.to_string(),
            c.index.to_string(),
            c.conductor.to_string(),
            format!("{:?}", c.parity).to_lowercase(),
            cyc_vec_json(&c.values),
        ])?;
    }
    finish(w)
}

pub fn twisted_csv(doc: &TwistedDoc) -> Result<String> {
    let mut w = writer();
    w.write_record(["modulus", "char_index", "kind", "n_or_k", "upper", "value"])?;
    let m = doc.character.modulus.to_string();
    let i = doc.character.index.to_string();
    for row in &doc.rows {
        w.write_record([
            m.clone(),
            i.clone(),
            "gen_euler".into(),
            row.n.to_string(),
            String::new(),
            cyc_vec_json(&row.gen_euler),
        ])?;
        w.write_record([
            m.clone(),
            i.clone(),
            "gen_genocchi".into(),
            row.n.to_string(),
            String::new(),
            cyc_vec_json(&row.gen_genocchi),
        ])?;
    }
    for ps in &doc.power_sums {
        w.write_record([
            m.clone(),
            i.clone(),
            "power_sum".into(),
            ps.k.to_string(),
            ps.upper.to_string(),
            cyc_json(&ps.value),
        ])?;
    }
    finish(w)
}

pub fn fermionic_csv(doc: &FermionicDoc) -> Result<String> {
    let mut w = writer();
    w.write_record(["p", "n", "level", "partial_sum", "euler_value", "valuation"])?;
    for row in &doc.rows {
        w.write_record([
            row.p.to_string(),
            row.n.to_string(),
            row.level.to_string(),
            row.partial_sum.to_string(),
            row.euler_value.to_string(),
            row.valuation.to_string(),
        ])?;
    }
    finish(w)
}

fn write_cert_records(
    w: &mut csv::Writer<Vec<u8>>,
    suite: &str,
    certs: &[IdentityCertificate],
) -> Result<()> {
    for c in certs {
        let params = c
            .params
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect::<Vec<_>>()
            .join(";");
        w.write_record([
            suite.to_string(),
            c.theorem.clone(),
            params,
            c.lhs.clone(),
            c.rhs.clone(),
            c.status.to_string(),
            c.first_mismatch.clone().unwrap_or_default(),
        ])?;
    }
    Ok(())
}

const REPORT_HEADER: [&str; 7] = [
    "suite",
    "theorem",
    "params",
    "lhs",
    "rhs",
    "status",
    "first_mismatch",
];

pub fn report_csv(report: &VerificationReport) -> Result<String> {
    let mut w = writer();
    w.write_record(REPORT_HEADER)?;
    write_cert_records(&mut w, &report.suite, &report.certificates)?;
    finish(w)
}

pub fn full_report_csv(report: &FullReport) -> Result<String> {
    let mut w = writer();
    w.write_record(REPORT_HEADER)?;
    for suite in &report.suites {
        write_cert_records(&mut w, &suite.suite, &suite.certificates)?;
    }
    finish(w)
}
