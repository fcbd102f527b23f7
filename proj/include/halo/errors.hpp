#pragma once

#include <stdexcept>
#include <string>

namespace halo {

/// Base class for every recoverable error raised by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what_arg) : std::runtime_error(what_arg) {}
};

struct PoseBelowTerrain : Error { using Error::Error; };
struct TooFewFrames : Error { using Error::Error; };
struct DegenerateMotion : Error { using Error::Error; };
struct EmptyCloud : Error { using Error::Error; };
struct NoCorrespondences : Error { using Error::Error; };
struct NoOverlap : Error { using Error::Error; };
struct NoCandidates : Error { using Error::Error; };
struct NoFrontiers : Error { using Error::Error; };
struct EmptyRegion : Error { using Error::Error; };
struct DegenerateCluster : Error { using Error::Error; };
struct BadConfig : Error { using Error::Error; };
struct BadDistance : Error { using Error::Error; };
struct BadScenario : Error { using Error::Error; };
struct IoError : Error { using Error::Error; };

}  // namespace halo
