#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace trigraph {

using Vertex = std::uint32_t;

// Root of every exception thrown by the library. Callers that only care about
// "bad input vs. bug" can catch this one type.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SelfLoop : public Error {
 public:
  explicit SelfLoop(Vertex v)
      : Error("self-loop on vertex " + std::to_string(v)), vertex(v) {}
  Vertex vertex;
};

class VertexOutOfRange : public Error {
 public:
  VertexOutOfRange(std::uint64_t v, std::size_t n)
      : Error("vertex " + std::to_string(v) + " out of range for n=" + std::to_string(n)),
        vertex(v),
        n(n) {}
  std::uint64_t vertex;
  std::size_t n;
};

class MatrixTooLarge : public Error {
 public:
  MatrixTooLarge(std::size_t n, std::size_t budget)
      : Error("adjacency matrix for n=" + std::to_string(n) + " exceeds budget of " +
              std::to_string(budget) +
              " vertices (raise --matrix-budget or use chiba_nishizeki)"),
        n(n),
        budget(budget) {}
  std::size_t n;
  std::size_t budget;
};

class MatrixMissing : public Error {
 public:
  MatrixMissing() : Error("adjacency matrix not built; call build_matrix first") {}
};

class EllOutOfRange : public Error {
 public:
  explicit EllOutOfRange(int ell)
      : Error("clique size " + std::to_string(ell) + " outside [3, 8]"), ell(ell) {}
  int ell;
};

class UnknownAlgorithm : public Error {
 public:
  explicit UnknownAlgorithm(std::string name)
      : Error("unknown algorithm '" + name + "'"), name(std::move(name)) {}
  std::string name;
};

class InvalidProbability : public Error {
 public:
  explicit InvalidProbability(double p)
      : Error("invalid probability " + std::to_string(p)), p(p) {}
  double p;
};

class ParamOutOfRange : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line(line) {}
  std::size_t line;
};

}  // namespace trigraph
