#ifndef DEQUIV_CERTIFICATE_HPP_
#define DEQUIV_CERTIFICATE_HPP_

#include <dequiv/proof.hpp>

#include <json.hpp>

#include <string>

namespace dequiv {

enum class Format { text, json };

nlohmann::ordered_json to_json(const Check& c);
nlohmann::ordered_json to_json(const Certificate& cert);

/// Deterministic serialization: same certificate, same bytes.
std::string emit(const Certificate& cert, Format format, bool trace = false);

}  // namespace dequiv

#endif  // DEQUIV_CERTIFICATE_HPP_
