//! Python bindings for ortholat.

use std::collections::BTreeMap;

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use ortholat_core::census::census as run_census;
use ortholat_core::grade::parse_rational;
use ortholat_core::implication::implication_table_report;
use ortholat_core::{
    build_implication, builtin_logic as core_builtin, classify_negation as core_classify, complement_class,
    dot::to_dot, enumerate_lattices as core_enumerate, find_orthocomplementations, grade_negate as core_grade_negate,
    is_distributive, is_modular, verify_axioms, CanonicalLattice, Error, Grade, GradeNegation, ImplicationKind,
    Implication, Lattice as CoreLattice, StructureDocument, UnaryMap,
};

fn err(e: Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// A finite lattice with labeled elements.
#[pyclass(name = "Lattice", module = "ortholat", frozen)]
struct PyLattice {
    inner: CoreLattice,
}

impl PyLattice {
    fn idx(&self, label: &str) -> PyResult<usize> {
        self.inner.require(label).map_err(err)
    }

    fn map(&self, m: &BTreeMap<String, String>) -> PyResult<UnaryMap> {
        UnaryMap::from_pairs(&self.inner, &m.iter().collect::<Vec<_>>()).map_err(err)
    }
}

#[pymethods]
impl PyLattice {
    #[new]
    fn new(elements: Vec<String>, covers: Vec<(String, String)>) -> PyResult<Self> {
        CoreLattice::from_covers(&elements, &covers).map(|inner| PyLattice { inner }).map_err(err)
    }

    /// Load a structure document; only the order is used.
    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        let doc = StructureDocument::from_json(text).map_err(err)?;
        let inner = CoreLattice::from_poset(doc.poset().map_err(err)?).map_err(err)?;
        Ok(PyLattice { inner })
    }

    fn to_json(&self) -> String {
        StructureDocument::from_lattice(&self.inner, None).to_json()
    }

    #[getter]
    fn labels(&self) -> Vec<String> {
        self.inner.labels().to_vec()
    }

    fn __len__(&self) -> usize {
        self.inner.len()
    }

    fn __repr__(&self) -> String {
        format!("Lattice({})", self.inner.labels().join(", "))
    }

    fn covers(&self) -> Vec<(String, String)> {
        StructureDocument::from_lattice(&self.inner, None).covers
    }

    fn leq(&self, a: &str, b: &str) -> PyResult<bool> {
        Ok(self.inner.leq(self.idx(a)?, self.idx(b)?))
    }

    fn join(&self, a: &str, b: &str) -> PyResult<String> {
        Ok(self.inner.label(self.inner.join(self.idx(a)?, self.idx(b)?)).to_string())
    }

    fn meet(&self, a: &str, b: &str) -> PyResult<String> {
        Ok(self.inner.label(self.inner.meet(self.idx(a)?, self.idx(b)?)).to_string())
    }

    fn axioms_hold(&self) -> bool {
        verify_axioms(&self.inner).all_pass()
    }

    fn is_modular(&self) -> PyResult<bool> {
        Ok(is_modular(&self.inner).map_err(err)?.holds)
    }

    fn is_distributive(&self) -> PyResult<bool> {
        Ok(is_distributive(&self.inner).map_err(err)?.holds)
    }

    /// `uniquely complemented`, `multiply complemented` or `non-complemented`.
    fn complement_class(&self) -> PyResult<String> {
        Ok(complement_class(&self.inner).map_err(err)?.kind.to_string())
    }

    fn orthocomplementations(&self) -> PyResult<Vec<BTreeMap<String, String>>> {
        let found = find_orthocomplementations(&self.inner).map_err(err)?;
        Ok(found.iter().map(|o| o.map().to_label_map(&self.inner)).collect())
    }

    /// Flags held by a negation given as a label map.
    fn classify_negation(&self, negation: BTreeMap<String, String>) -> PyResult<Vec<String>> {
        let class = core_classify(&self.inner, &self.map(&negation)?).map_err(err)?;
        Ok(class.flags.iter().map(|f| f.name().to_string()).collect())
    }

    /// `x -> y` for one formula kind, keyed by `(x, y)`.
    fn implication(&self, negation: BTreeMap<String, String>, kind: &str) -> PyResult<BTreeMap<(String, String), String>> {
        let neg = self.map(&negation)?;
        let kind: ImplicationKind = kind.parse().map_err(err)?;
        let imp = build_implication(&self.inner, &neg, kind).map_err(err)?;
        Ok(table_dict(&self.inner, &imp))
    }

    /// Contract flags of all six formula kinds under an ortho negation.
    fn implication_report(&self, negation: BTreeMap<String, String>) -> PyResult<BTreeMap<String, Vec<String>>> {
        let neg = self.map(&negation)?;
        let report = implication_table_report(&self.inner, &neg).map_err(err)?;
        Ok(report.into_iter().map(|r| (r.kind.to_string(), r.verdict.flags().iter().map(|s| s.to_string()).collect())).collect())
    }

    #[pyo3(signature = (name = "lattice"))]
    fn to_dot(&self, name: &str) -> String {
        to_dot(self.inner.poset(), name)
    }
}

fn table_dict(l: &CoreLattice, imp: &Implication) -> BTreeMap<(String, String), String> {
    let mut out = BTreeMap::new();
    for x in 0..l.len() {
        for y in 0..l.len() {
            out.insert((l.label(x).to_string(), l.label(y).to_string()), l.label(imp.get(x, y)).to_string());
        }
    }
    out
}

/// A named logic: lattice, negation map, implication table, class and contract flags.
#[pyfunction]
fn builtin_logic(py: Python<'_>, name: &str) -> PyResult<Py<PyAny>> {
    let s = core_builtin(name).map_err(err)?;
    let class = s.class().map_err(err)?.to_string();
    let flags: Vec<String> = s.verdict().map_err(err)?.flags().iter().map(|f| f.to_string()).collect();
    let d = pyo3::types::PyDict::new(py);
    d.set_item("negation", s.negation.to_label_map(&s.lattice))?;
    d.set_item("implication", table_dict(&s.lattice, &s.implication))?;
    d.set_item("class", class)?;
    d.set_item("flags", flags)?;
    d.set_item("lattice", PyLattice { inner: s.lattice })?;
    Ok(d.into_any().unbind())
}

/// Unlabeled lattices on `n` elements, one per isomorphism class.
#[pyfunction]
fn enumerate_lattices(n: usize) -> PyResult<Vec<PyLattice>> {
    let all: Vec<CanonicalLattice> = core_enumerate(n).map_err(err)?;
    Ok(all.into_iter().map(|c| PyLattice { inner: c.lattice }).collect())
}

/// Class counts for `n`-element lattices.
#[pyfunction]
fn census(n: usize) -> PyResult<BTreeMap<String, usize>> {
    let c = run_census(n).map_err(err)?;
    Ok(BTreeMap::from([
        ("lattices".to_string(), c.lattices),
        ("modular".to_string(), c.modular),
        ("distributive".to_string(), c.distributive),
        ("uniquely_complemented".to_string(), c.uniquely_complemented),
        ("multiply_complemented".to_string(), c.multiply_complemented),
        ("non_complemented".to_string(), c.non_complemented),
        ("orthocomplemented".to_string(), c.orthocomplemented),
    ]))
}

/// Negate a grade given as `"n/d"`. `family` is standard, lambda, yager, discrete or dual_discrete.
#[pyfunction]
#[pyo3(signature = (u, family = "standard", parameter = None))]
fn grade_negate(u: &str, family: &str, parameter: Option<&str>) -> PyResult<String> {
    let param = || -> PyResult<_> {
        let p = parameter.ok_or_else(|| PyValueError::new_err(format!("{family} needs a parameter")))?;
        parse_rational(p).map_err(err)
    };
    let g = match family {
        "standard" => GradeNegation::Standard,
        "lambda" => GradeNegation::Lambda { lambda: param()? },
        "yager" => GradeNegation::Yager { p: param()? },
        "discrete" => GradeNegation::Discrete,
        "dual_discrete" => GradeNegation::DualDiscrete,
        other => return Err(PyValueError::new_err(format!("unknown negation family `{other}`"))),
    };
    let u: Grade = u.parse().map_err(err)?;
    Ok(core_grade_negate(&g, &u).map_err(err)?.to_string())
}

#[pymodule]
fn ortholat(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyLattice>()?;
    m.add_function(wrap_pyfunction!(builtin_logic, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_lattices, m)?)?;
    m.add_function(wrap_pyfunction!(census, m)?)?;
    m.add_function(wrap_pyfunction!(grade_negate, m)?)?;
    Ok(())
}
