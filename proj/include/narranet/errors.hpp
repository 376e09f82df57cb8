#pragma once

#include <stdexcept>
#include <string>

namespace narranet {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// corpus
struct NoChaptersFound : Error { using Error::Error; };
struct NonMonotoneHeading : Error { using Error::Error; };
struct AmbiguousAlias : Error { using Error::Error; };

// network
struct EmptyNetwork : Error { using Error::Error; };

// sentiment
struct EmptySubject : Error { using Error::Error; };

// topics
struct EmptyVocabulary : Error { using Error::Error; };
struct DimensionError : Error { using Error::Error; };
struct EmptyWindow : Error { using Error::Error; };
struct InvalidPhases : Error { using Error::Error; };

// pipeline
struct ConfigError : Error { using Error::Error; };
struct StageDependencyMissing : Error { using Error::Error; };
struct IoError : Error { using Error::Error; };

} // namespace narranet
