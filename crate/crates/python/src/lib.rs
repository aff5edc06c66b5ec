//! Python bindings. Objects round-trip through the same wire encoding as the
//! command-line tool, so files are interchangeable.

use pyo3::create_exception;
use pyo3::exceptions::{PyException, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyBytes;
use rand::rngs::OsRng;
use rand::SeedableRng;
use rand_chacha::ChaCha20Rng;

use ibpsc::codec::{decode, encode};
use ibpsc::{CurveProfile, Error, TpMode};

create_exception!(ibpsc_py, InvalidError, PyException, "The object failed a cryptographic check.");

fn value_err(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn lib_err(e: Error) -> PyErr {
    if e.is_invalid() {
        InvalidError::new_err("invalid")
    } else {
        value_err(e)
    }
}

fn rng(seed: Option<&[u8]>) -> PyResult<ChaCha20Rng> {
    match seed {
        Some(s) => Ok(ibpsc::seeded_rng(s)),
        None => ChaCha20Rng::from_rng(OsRng).map_err(value_err),
    }
}

macro_rules! wire_class {
    ($py_name:literal, $wrapper:ident, $inner:ty { $($extra:tt)* }) => {
        #[pyclass(name = $py_name, frozen, module = "ibpsc_py")]
        pub struct $wrapper(pub $inner);

        #[pymethods]
        impl $wrapper {
            fn to_bytes<'py>(&self, py: Python<'py>) -> Bound<'py, PyBytes> {
                PyBytes::new(py, &encode(&self.0))
            }

            #[staticmethod]
            fn from_bytes(data: &[u8]) -> PyResult<Self> {
                decode::<$inner>(data).map(Self).map_err(value_err)
            }

            fn __eq__(&self, other: &Self) -> bool {
                self.0 == other.0
            }

            $($extra)*
        }
    };
}

wire_class!("SystemParams", PySystemParams, ibpsc::SystemParams {
    #[getter]
    fn profile(&self) -> &'static str {
        self.0.profile.name()
    }

    fn __repr__(&self) -> String {
        format!("SystemParams(profile={:?})", self.0.profile.name())
    }
});

wire_class!("MasterSecret", PyMasterSecret, ibpsc::MasterSecret {
    fn __repr__(&self) -> &'static str {
        "MasterSecret(<redacted>)"
    }
});

wire_class!("UserPrivateKey", PyUserPrivateKey, ibpsc::UserPrivateKey {
    #[getter]
    fn identity<'py>(&self, py: Python<'py>) -> Bound<'py, PyBytes> {
        PyBytes::new(py, &self.0.identity)
    }

    fn __repr__(&self) -> String {
        format!("UserPrivateKey(identity={:?})", String::from_utf8_lossy(&self.0.identity))
    }
});

wire_class!("Signcryption", PySigncryption, ibpsc::Signcryption {
    fn __len__(&self) -> usize {
        encode(&self.0).len()
    }
});

wire_class!("TPProof", PyTPProof, ibpsc::TPProof {
    #[getter]
    fn message<'py>(&self, py: Python<'py>) -> Bound<'py, PyBytes> {
        PyBytes::new(py, &self.0.message)
    }

    #[getter]
    fn signcryption(&self) -> PySigncryption {
        PySigncryption(self.0.sigma.clone())
    }
});

/// Returns `(params, master)`. A seed makes the output reproducible and is
/// only for test vectors.
#[pyfunction]
#[pyo3(signature = (seed=None, profile="bls12-381"))]
fn setup(seed: Option<&[u8]>, profile: &str) -> PyResult<(PySystemParams, PyMasterSecret)> {
    let profile: CurveProfile = profile.parse().map_err(lib_err)?;
    let (params, master) = ibpsc::setup(profile, &mut rng(seed)?);
    Ok((PySystemParams(params), PyMasterSecret(master)))
}

#[pyfunction]
fn keygen(params: &PySystemParams, master: &PyMasterSecret, identity: &[u8]) -> PyResult<PyUserPrivateKey> {
    ibpsc::keygen(&params.0, &master.0, identity).map(PyUserPrivateKey).map_err(lib_err)
}

#[pyfunction]
#[pyo3(signature = (params, key, id_a, id_b, message, seed=None))]
fn signcrypt(
    params: &PySystemParams,
    key: &PyUserPrivateKey,
    id_a: &[u8],
    id_b: &[u8],
    message: &[u8],
    seed: Option<&[u8]>,
) -> PyResult<PySigncryption> {
    ibpsc::signcrypt(&params.0, &key.0, id_a, id_b, message, &mut rng(seed)?).map(PySigncryption).map_err(lib_err)
}

/// Returns `(message, proof)`; raises `InvalidError` on any failed check.
#[pyfunction]
fn unsigncrypt<'py>(
    py: Python<'py>,
    params: &PySystemParams,
    key: &PyUserPrivateKey,
    id_a: &[u8],
    id_b: &[u8],
    sigma: &PySigncryption,
) -> PyResult<(Bound<'py, PyBytes>, PyTPProof)> {
    let (m, proof) = ibpsc::unsigncrypt(&params.0, &key.0, id_a, id_b, &sigma.0).map_err(lib_err)?;
    Ok((PyBytes::new(py, &m), PyTPProof(proof)))
}

#[pyfunction]
fn verify_public(params: &PySystemParams, id_a: &[u8], id_b: &[u8], sigma: &PySigncryption) -> bool {
    ibpsc::verify_public(&params.0, id_a, id_b, &sigma.0).is_valid()
}

#[pyfunction]
#[pyo3(signature = (params, id_a, id_b, proof, relaxed=false))]
fn tp_verify(params: &PySystemParams, id_a: &[u8], id_b: &[u8], proof: &PyTPProof, relaxed: bool) -> bool {
    let mode = if relaxed { TpMode::Relaxed } else { TpMode::Strict };
    ibpsc::tp_verify_with(&params.0, id_a, id_b, &proof.0, mode).is_valid()
}

#[pymodule]
fn ibpsc_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PySystemParams>()?;
    m.add_class::<PyMasterSecret>()?;
    m.add_class::<PyUserPrivateKey>()?;
    m.add_class::<PySigncryption>()?;
    m.add_class::<PyTPProof>()?;
    m.add("InvalidError", m.py().get_type::<InvalidError>())?;
    m.add_function(wrap_pyfunction!(setup, m)?)?;
    m.add_function(wrap_pyfunction!(keygen, m)?)?;
    m.add_function(wrap_pyfunction!(signcrypt, m)?)?;
    m.add_function(wrap_pyfunction!(unsigncrypt, m)?)?;
    m.add_function(wrap_pyfunction!(verify_public, m)?)?;
    m.add_function(wrap_pyfunction!(tp_verify, m)?)?;
    Ok(())
}
