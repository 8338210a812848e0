// Copyright 2026 The Neurometry Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#ifndef NEUROMETRY_REPORT_HPP_
#define NEUROMETRY_REPORT_HPP_

#include <string>
#include <vector>

#include <json.hpp>

#include "neurometry/accuracy.hpp"
#include "neurometry/error.hpp"
#include "neurometry/metrics.hpp"
#include "neurometry/morphometry.hpp"
#include "neurometry/util.hpp"

namespace neurometry {

struct PerImageMetrics {
  std::string image_id;
  MatchCounts counts;
  SegMetrics metrics;

  bool operator==(const PerImageMetrics&) const = default;
};

struct MeasurementRecord {
  std::string image_id;
  int instance_id = 0;
  std::string source;  // "gt" or "pred"
  Measurements values;

  bool operator==(const MeasurementRecord&) const = default;
};

struct ImageFailure {
  std::string image_id;
  std::string error;

  bool operator==(const ImageFailure&) const = default;
};

/// Everything one evaluation run produces. metrics.csv / accuracy.csv are
/// 2-decimal views of this; report.json carries it at full precision.
struct ReportBundle {
  std::string aggregation = "micro";  // or "per_image_mean"
  double threshold = 0.5;
  std::vector<PerImageMetrics> per_image;
  SegMetrics dataset;
  std::vector<MeasurementRecord> measurements;
  bool accuracy_defined = false;
  AccuracyTable accuracy;
  std::vector<ImageFailure> failures;
  std::vector<std::string> warnings;

  bool operator==(const ReportBundle&) const = default;
};

// ---------------------------------------------------------------------------
// CSV views. Percent values are fixed at two decimals.
// ---------------------------------------------------------------------------

inline std::string measurements_csv_header() {
  return "image_id,instance_id,source,length_px,width_px,area_px2,"
         "min_intensity,mean_intensity,max_intensity";
}

inline std::string to_csv(const std::vector<MeasurementRecord>& records) {
  std::string out = measurements_csv_header() + "\n";
  for (const auto& rec : records) {
    const auto& m = rec.values;
    out += rec.image_id + "," + std::to_string(rec.instance_id) + "," +
           rec.source + "," + std::to_string(m.length) + "," +
           std::to_string(m.width) + "," + std::to_string(m.area) + "," +
           std::to_string(m.min_intensity) + "," +
           format_fixed(m.mean_intensity, 4) + "," +
           std::to_string(m.max_intensity) + "\n";
  }
  return out;
}

inline std::string to_metrics_csv(const SegMetrics& s) {
  std::string out = "metric,value_percent\n";
  out += "precision," + format_percent(s.precision) + "\n";
  out += "recall," + format_percent(s.recall) + "\n";
  out += "f1," + format_percent(s.f1) + "\n";
  out += "iou_accuracy," + format_percent(s.iou_accuracy) + "\n";
  out += "sq," + format_percent(s.sq) + "\n";
  out += "rq," + format_percent(s.rq) + "\n";
  out += "pq," + format_percent(s.pq) + "\n";
  out += "pixel_accuracy," + format_percent(s.pixel_accuracy) + "\n";
  return out;
}

inline std::string to_accuracy_csv(const AccuracyTable& t) {
  std::string out = "metric,accuracy_percent\n";
  for (std::size_t k = 0; k < kMeasurementNames.size(); ++k) {
    out += std::string(kMeasurementNames[k]) + "," +
           format_fixed(t.per_metric[k], 2) + "\n";
  }
  out += "overall_macro," + format_fixed(t.overall_macro, 2) + "\n";
  out += "overall_micro," + format_fixed(t.overall_micro, 2) + "\n";
  return out;
}

// ---------------------------------------------------------------------------
// report.json: full precision, key order fixed, parse(write(b)) == b.
// ---------------------------------------------------------------------------

namespace detail {

inline nlohmann::ordered_json metrics_to_json(const SegMetrics& s) {
  nlohmann::ordered_json j;
  j["precision"] = s.precision;
  j["recall"] = s.recall;
  j["f1"] = s.f1;
  j["iou_accuracy"] = s.iou_accuracy;
  j["sq"] = s.sq;
  j["rq"] = s.rq;
  j["pq"] = s.pq;
  j["pixel_accuracy"] = s.pixel_accuracy;
  j["undefined"] = s.undefined;
  return j;
}

inline SegMetrics metrics_from_json(const nlohmann::json& j) {
  SegMetrics s;
  s.precision = j.at("precision").get<double>();
  s.recall = j.at("recall").get<double>();
  s.f1 = j.at("f1").get<double>();
  s.iou_accuracy = j.at("iou_accuracy").get<double>();
  s.sq = j.at("sq").get<double>();
  s.rq = j.at("rq").get<double>();
  s.pq = j.at("pq").get<double>();
  s.pixel_accuracy = j.at("pixel_accuracy").get<double>();
  s.undefined = j.at("undefined").get<std::vector<std::string>>();
  return s;
}

inline nlohmann::ordered_json counts_to_json(const MatchCounts& c) {
  nlohmann::ordered_json j;
  j["tp"] = c.tp;
  j["fp"] = c.fp;
  j["fn"] = c.fn;
  j["iou_sum"] = c.iou_sum;
  j["pixel_agreements"] = c.pixel_agreements;
  j["pixel_total"] = c.pixel_total;
  return j;
}

inline MatchCounts counts_from_json(const nlohmann::json& j) {
  MatchCounts c;
  c.tp = j.at("tp").get<std::int64_t>();
  c.fp = j.at("fp").get<std::int64_t>();
  c.fn = j.at("fn").get<std::int64_t>();
  c.iou_sum = j.at("iou_sum").get<double>();
  c.pixel_agreements = j.at("pixel_agreements").get<std::int64_t>();
  c.pixel_total = j.at("pixel_total").get<std::int64_t>();
  return c;
}

inline nlohmann::ordered_json measurements_to_json(const Measurements& m) {
  nlohmann::ordered_json j;
  j["length"] = m.length;
  j["width"] = m.width;
  j["area"] = m.area;
  j["min_intensity"] = m.min_intensity;
  j["mean_intensity"] = m.mean_intensity;
  j["max_intensity"] = m.max_intensity;
  return j;
}

inline Measurements measurements_from_json(const nlohmann::json& j) {
  Measurements m;
  m.length = j.at("length").get<int>();
  m.width = j.at("width").get<int>();
  m.area = j.at("area").get<std::int64_t>();
  m.min_intensity = j.at("min_intensity").get<int>();
  m.mean_intensity = j.at("mean_intensity").get<double>();
  m.max_intensity = j.at("max_intensity").get<int>();
  return m;
}

}  // namespace detail

inline std::string to_report_json(const ReportBundle& b) {
  nlohmann::ordered_json doc;
  doc["aggregation"] = b.aggregation;
  doc["threshold"] = b.threshold;
  doc["per_image"] = nlohmann::ordered_json::array();
  for (const auto& pi : b.per_image) {
    nlohmann::ordered_json j;
    j["image_id"] = pi.image_id;
    j["counts"] = detail::counts_to_json(pi.counts);
    j["metrics"] = detail::metrics_to_json(pi.metrics);
    doc["per_image"].push_back(std::move(j));
  }
  doc["dataset"] = detail::metrics_to_json(b.dataset);
  doc["measurements"] = nlohmann::ordered_json::array();
  for (const auto& rec : b.measurements) {
    nlohmann::ordered_json j;
    j["image_id"] = rec.image_id;
    j["instance_id"] = rec.instance_id;
    j["source"] = rec.source;
    j["values"] = detail::measurements_to_json(rec.values);
    doc["measurements"].push_back(std::move(j));
  }
  nlohmann::ordered_json acc;
  acc["defined"] = b.accuracy_defined;
  acc["n_pairs"] = b.accuracy.n_pairs;
  nlohmann::ordered_json per_metric;
  for (std::size_t k = 0; k < kMeasurementNames.size(); ++k) {
    per_metric[kMeasurementNames[k]] = b.accuracy.per_metric[k];
  }
  acc["per_metric"] = std::move(per_metric);
  acc["overall_macro"] = b.accuracy.overall_macro;
  acc["overall_micro"] = b.accuracy.overall_micro;
  doc["accuracy"] = std::move(acc);
  doc["failures"] = nlohmann::ordered_json::array();
  for (const auto& f : b.failures) {
    doc["failures"].push_back({{"image_id", f.image_id}, {"error", f.error}});
  }
  doc["warnings"] = b.warnings;
  return doc.dump(2) + "\n";
}

inline ReportBundle parse_report_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed report JSON: ") + e.what());
  }
  ReportBundle b;
  try {
    b.aggregation = doc.at("aggregation").get<std::string>();
    b.threshold = doc.at("threshold").get<double>();
    for (const auto& j : doc.at("per_image")) {
      PerImageMetrics pi;
      pi.image_id = j.at("image_id").get<std::string>();
      pi.counts = detail::counts_from_json(j.at("counts"));
      pi.metrics = detail::metrics_from_json(j.at("metrics"));
      b.per_image.push_back(std::move(pi));
    }
    b.dataset = detail::metrics_from_json(doc.at("dataset"));
    for (const auto& j : doc.at("measurements")) {
      MeasurementRecord rec;
      rec.image_id = j.at("image_id").get<std::string>();
      rec.instance_id = j.at("instance_id").get<int>();
      rec.source = j.at("source").get<std::string>();
      rec.values = detail::measurements_from_json(j.at("values"));
      b.measurements.push_back(std::move(rec));
    }
    const auto& acc = doc.at("accuracy");
    b.accuracy_defined = acc.at("defined").get<bool>();
    b.accuracy.n_pairs = acc.at("n_pairs").get<std::int64_t>();
    for (std::size_t k = 0; k < kMeasurementNames.size(); ++k) {
      b.accuracy.per_metric[k] =
          acc.at("per_metric").at(kMeasurementNames[k]).get<double>();
    }
    b.accuracy.overall_macro = acc.at("overall_macro").get<double>();
    b.accuracy.overall_micro = acc.at("overall_micro").get<double>();
    for (const auto& j : doc.at("failures")) {
      b.failures.push_back({j.at("image_id").get<std::string>(),
                            j.at("error").get<std::string>()});
    }
    b.warnings = doc.at("warnings").get<std::vector<std::string>>();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("report JSON missing fields: ") + e.what());
  }
  return b;
}

}  // namespace neurometry

#endif  // NEUROMETRY_REPORT_HPP_
