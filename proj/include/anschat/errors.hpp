#pragma once

#include <stdexcept>
#include <string>

namespace anschat {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// --- ingestion ---
struct IoError : Error { using Error::Error; };
struct FormatError : Error { using Error::Error; };
struct DuplicateId : Error { using Error::Error; };

// --- features ---
struct SchemaMismatch : Error { using Error::Error; };
struct PreconditionError : Error { using Error::Error; };

// --- kde ---
struct EmptyCluster : Error { using Error::Error; };
struct DimensionMismatch : Error { using Error::Error; };
struct NonPositiveBandwidth : Error { using Error::Error; };
struct TooFewPoints : Error { using Error::Error; };

// --- clustering ---
struct EmptySeedCluster : Error { using Error::Error; };
struct DegenerateInit : Error { using Error::Error; };
struct DegenerateData : Error { using Error::Error; };

// --- evaluation ---
struct UndefinedKappa : Error { using Error::Error; };

// --- synthgen / config ---
struct ConfigError : Error { using Error::Error; };

}  // namespace anschat
