//! Seifert fibered torsion values and integrality certificates.
