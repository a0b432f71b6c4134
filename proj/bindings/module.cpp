#include <pybind11/pybind11.h>
PYBIND11_MODULE(_tambarize, m) { m.doc() = "core bindings"; }
