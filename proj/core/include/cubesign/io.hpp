#ifndef CUBESIGN_IO_HPP
#define CUBESIGN_IO_HPP

#include <iosfwd>
#include <string>

#include "cubesign/graph.hpp"
#include "cubesign/orthosolve.hpp"
#include "cubesign/signing.hpp"
#include "cubesign/spectral.hpp"

namespace cubesign {

// Text formats. All vertices and generators are written as n-character
// bitstrings, most significant coordinate first.

/// Graph file: line 1 "n=<int>", then one generator bitstring per line.
/// Duplicate or zero generators are rejected.
CubelikeGraph read_graph(std::istream& in);
CubelikeGraph read_graph_file(const std::string& path);
void write_graph(std::ostream& out, const CubelikeGraph& g);

/// Vertex-set file: one bitstring vertex per line.
VertexSet read_vertex_set(std::istream& in, int n);
VertexSet read_vertex_set_file(const std::string& path, int n);
void write_vertex_set(std::ostream& out, const VertexSet& u);

/// Signing file: header "n=<int> d=<int>", then one upper-triangle entry
/// per line: "<u> <v> <entry>" with entry in {+1,-1,+i,-i}. The lower
/// triangle is implied by Hermitian symmetry.
SigningMatrix read_signing(std::istream& in);
SigningMatrix read_signing_file(const std::string& path);
void write_signing(std::ostream& out, const SigningMatrix& m, int degree);

/// Certificate file: one 4-cycle per line as four vertex bitstrings in
/// canonical order.
ParityCertificate read_certificate(std::istream& in, int n);
void write_certificate(std::ostream& out, const ParityCertificate& cert,
                       int n);

/// Labelling file: "<u> <v> <bit>" per edge.
EdgeLabelling read_labelling(std::istream& in, int n);
void write_labelling(std::ostream& out, const EdgeLabelling& f, int n);

/// Spectrum report: "lambda=<int> mult=<int>" lines, descending.
void write_spectrum(std::ostream& out, const SpectrumReport& r);

/// Experiment report: "trial=<i> d=<d> lambda=<int> ratio=<rational>".
void write_experiment(std::ostream& out, const ExperimentStats& stats);

}  // namespace cubesign

#endif  // CUBESIGN_IO_HPP
