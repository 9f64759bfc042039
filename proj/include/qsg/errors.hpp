#ifndef QSG_ERRORS_HPP
#define QSG_ERRORS_HPP

#include <stdexcept>

namespace qsg {

// Base class for all domain errors raised by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

#define QSG_DEFINE_ERROR(Name)        \
    struct Name : Error {             \
        using Error::Error;           \
    };

// graph construction
QSG_DEFINE_ERROR(EmptyGraph)
QSG_DEFINE_ERROR(SelfLoop)
QSG_DEFINE_ERROR(DuplicateEdge)
QSG_DEFINE_ERROR(DisconnectedGraph)
QSG_DEFINE_ERROR(IndexOutOfRange)

// paths and cycles
QSG_DEFINE_ERROR(NotACycle)
QSG_DEFINE_ERROR(PathNotOnGraph)

// two-particle configuration space
QSG_DEFINE_ERROR(TooFewVertices)
QSG_DEFINE_ERROR(DisconnectedConfigurationSpace)

// exact integer algebra
QSG_DEFINE_ERROR(NotUnimodular)
QSG_DEFINE_ERROR(DimensionMismatch)

// gauge potentials and Hamiltonians
QSG_DEFINE_ERROR(BaseMismatch)
QSG_DEFINE_ERROR(HostMismatch)

// statistics classification
QSG_DEFINE_ERROR(NoAnchorVertex)
QSG_DEFINE_ERROR(InconsistentDiscretePhases)

// chain complexes
QSG_DEFINE_ERROR(NotAComplex)

// quantum
QSG_DEFINE_ERROR(EquivalenceViolation)
QSG_DEFINE_ERROR(ConvergenceFailure)
QSG_DEFINE_ERROR(WindowOutOfRange)

// text input
QSG_DEFINE_ERROR(ParseError)

#undef QSG_DEFINE_ERROR

}  // namespace qsg

#endif
