#include <benchmark/benchmark.h>

#include "ris/codebook.hpp"
#include "ris/pattern.hpp"
#include "ris/scenario.hpp"
#include "ris/signal.hpp"
#include "ris/wave.hpp"

namespace {

using namespace ris;

void bm_codeword_build(benchmark::State& state) {
    const ArrayGeometry geometry = ArrayGeometry::standard16x10();
    const WaveParams wave = wave_from_frequency(5.8e9);
    for (auto _ : state) {
        auto cw = build_codeword(geometry, wave, Direction{27.5, 270.0}, Direction{30.0, 0.0});
        benchmark::DoNotOptimize(cw);
    }
}
BENCHMARK(bm_codeword_build);

void bm_codebook_25(benchmark::State& state) {
    const Scenario s = parking_preset();
    for (auto _ : state) {
        auto cb = s.design_codebook();
        benchmark::DoNotOptimize(cb);
    }
}
BENCHMARK(bm_codebook_25);

void bm_pattern_cut(benchmark::State& state) {
    const ArrayGeometry geometry = ArrayGeometry::standard16x10();
    const WaveParams wave = wave_from_frequency(5.8e9);
    const Codeword cw = build_codeword(geometry, wave, Direction{0.0, 0.0}, Direction{30.0, 0.0});
    const Illumination illum = plane_wave_illumination(geometry, wave, Direction{0.0, 0.0});
    const auto grid = angle_grid(-90.0, 90.0, 0.25);
    for (auto _ : state) {
        auto cut = pattern_cut(geometry, wave, cw, illum, CutPlane::azimuth, grid);
        benchmark::DoNotOptimize(cut);
    }
}
BENCHMARK(bm_pattern_cut);

void bm_channel_synthesis(benchmark::State& state) {
    const Scenario s = parking_preset();
    LinkEnds ends;
    ends.bs_position = s.bs_pose.position;
    ends.bs_gain_dbi = s.bs_gain_dbi;
    ends.bs_boresight = s.bs_pose.boresight;
    ends.ue_position = s.ue_grid[12];
    ends.ue_gain_dbi = s.ue_gain_dbi;
    for (auto _ : state) {
        auto ch = synthesize_channels(s.ris_geometry, s.ris_pose, ends, s.ofdm, false);
        benchmark::DoNotOptimize(ch);
    }
}
BENCHMARK(bm_channel_synthesis);

void bm_beam_sweep(benchmark::State& state) {
    const Scenario s = parking_preset();
    const Codebook cb = s.design_codebook();
    LinkEnds ends;
    ends.bs_position = s.bs_pose.position;
    ends.bs_gain_dbi = s.bs_gain_dbi;
    ends.bs_boresight = s.bs_pose.boresight;
    ends.ue_position = s.ue_grid[12];
    ends.ue_gain_dbi = s.ue_gain_dbi;
    const auto channels = synthesize_channels(s.ris_geometry, s.ris_pose, ends, s.ofdm, false);
    for (auto _ : state) {
        auto result = beam_sweep(cb, channels, s.ofdm, 42);
        benchmark::DoNotOptimize(result);
    }
}
BENCHMARK(bm_beam_sweep);

}  // namespace

BENCHMARK_MAIN();
