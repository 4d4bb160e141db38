#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "balflip/certificate.hpp"
#include "balflip/coloring.hpp"
#include "balflip/complex.hpp"

namespace balflip {

struct ComplexFile {
  Complex complex;
  std::optional<Coloring> coloring;
};

// {"facets": [["0","1","v2"], ...], "coloring": {"0": 0, ...}}
// Throws ParseError on malformed input and NotAntichain on comparable facets.
ComplexFile parse_complex_json(std::string_view text);
std::string complex_to_json(const Complex& c, const std::optional<Coloring>& kappa = std::nullopt);

// A certificate file may also carry "removed" (facets of the excluded
// subcomplex) and "labels" (one display label per order entry).
struct CertificateFile {
  ShellingCertificate certificate;
  std::optional<Complex> removed;
  std::vector<std::string> labels;
};

CertificateFile parse_certificate_json(std::string_view text);
std::string certificate_to_json(const ShellingCertificate& cert,
                                const std::optional<Complex>& removed = std::nullopt,
                                const std::vector<std::string>& labels = {});

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace balflip
