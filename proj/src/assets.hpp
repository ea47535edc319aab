#pragma once

#include <string_view>

// Contents of assets/, embedded at configure time (see cmake/EmbedAssets.cmake).
namespace sindhikit::assets {

extern const std::string_view kSequentialLayout;
extern const std::string_view kStandardLayout;
extern const std::string_view kSindhiEnglishDictionary;
extern const std::string_view kEnglishSindhiDictionary;
extern const std::string_view kComputerDictionary;
extern const std::string_view kMedicalDictionary;
extern const std::string_view kBusinessDictionary;

}  // namespace sindhikit::assets
