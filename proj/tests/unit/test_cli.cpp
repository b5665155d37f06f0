/*
* Copyright (C) 2026 carleman-reach contributors
*
* Licensed under the Apache License, Version 2.0 (the "License");
* you may not use this file except in compliance with the License.
* You may obtain a copy of the License at
*
*     http://www.apache.org/licenses/LICENSE-2.0
*
* Unless required by applicable law or agreed to in writing, software
* distributed under the License is distributed on an "AS IS" BASIS,
* WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
* See the License for the specific language governing permissions and
* limitations under the License.
*/
#include "carleman/cli/run.hpp"

#include <gtest/gtest.h>

#include <sys/wait.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

using namespace carleman;
namespace fs = std::filesystem;

namespace
{
const fs::path data_dir = CARLEMAN_TEST_DATA_DIR;

fs::path scratch(const std::string& name)
{
    fs::path dir = fs::temp_directory_path() / ("carleman_cli_test_" + name);
    fs::remove_all(dir);
    return dir;
}

std::string slurp(const fs::path& path)
{
    std::ifstream in(path);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::size_t count_lines(const std::string& text)
{
    return static_cast<std::size_t>(std::count(text.begin(), text.end(), '\n'));
}

int run_binary(const std::string& args)
{
    const std::string cmd = std::string(CARLEMAN_REACH_EXE) + " " + args + " > /dev/null 2>&1";
    const int status      = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}
} // namespace

TEST(CliConfig, MissingOrderNamesTheField)
{
    cli::RunConfig config = cli::load_config(data_dir / "missing_order.json");
    try {
        cli::resolve(config);
        FAIL();
    }
    catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::config);
        EXPECT_NE(std::string(e.what()).find("\"N\""), std::string::npos);
    }
}

TEST(CliConfig, InlineTripletsAreZeroBased)
{
    cli::RunConfig config = cli::load_config(data_dir / "inline_linear.json");
    ReachRequest req      = cli::resolve(config);
    EXPECT_EQ(req.sys.F2(0, 3), -0.1);
    EXPECT_EQ(req.sys.F2.cwiseAbs().sum(), 0.1);
    EXPECT_EQ(req.order, 3);
}

TEST(CliConfig, RejectsUnknownModelAndParameters)
{
    EXPECT_THROW(cli::parse_config(nlohmann::json{{"model", "lorenz"}}), Error);
    cli::RunConfig config = cli::parse_config(
        nlohmann::json{{"model", "logistic"}, {"N", 2}, {"delta", 0.1}, {"T", 1.0}, {"params", {{"q", 1.0}}}});
    EXPECT_THROW(cli::resolve(config), Error);
}

TEST(CliConfig, JsonRoundTrip)
{
    cli::RunConfig config = cli::load_config(data_dir / "inline_linear.json");
    cli::RunConfig again  = cli::parse_config(cli::to_json(config));
    EXPECT_EQ(cli::to_json(again).dump(), cli::to_json(config).dump());
}

TEST(CliRun, TableShapeAndRowCount)
{
    cli::RunConfig config = cli::load_config(data_dir / "inline_linear.json");
    config.output_dir     = scratch("shape").string();
    cli::RunResult res    = cli::run(config);
    const std::string table = slurp(fs::path(config.output_dir) / "flowpipe.csv");
    // ceil(1.02 / 0.05) = 21 rows plus the header
    EXPECT_EQ(count_lines(table), 22u);
    const std::string header = table.substr(0, table.find('\n'));
    EXPECT_EQ(header, "t_lo,t_hi,lo_1,hi_1,lo_2,hi_2");
    EXPECT_EQ(std::count(header.begin(), header.end(), ','), 5);
    EXPECT_TRUE(fs::exists(fs::path(config.output_dir) / "epsilon.csv"));
    EXPECT_TRUE(fs::exists(fs::path(config.output_dir) / "flowpipe_segment_1.csv"));
    auto meta = nlohmann::json::parse(slurp(fs::path(config.output_dir) / "metadata.json"));
    EXPECT_EQ(meta["lifted_dim"], 14);
    EXPECT_TRUE(meta.contains("error_model"));
}

TEST(CliRun, MetadataReplayReproducesTableExactly)
{
    cli::RunConfig config = cli::load_config(data_dir / "seir_theorem1.json");
    config.simulate       = 0;
    config.output_dir     = scratch("replay_a").string();
    cli::run(config);
    cli::RunConfig replay = cli::load_config(fs::path(config.output_dir) / "metadata.json");
    replay.output_dir     = scratch("replay_b").string();
    cli::run(replay);
    EXPECT_EQ(slurp(fs::path(config.output_dir) / "flowpipe.csv"), slurp(fs::path(replay.output_dir) / "flowpipe.csv"));
    EXPECT_EQ(slurp(fs::path(config.output_dir) / "epsilon.csv"), slurp(fs::path(replay.output_dir) / "epsilon.csv"));
}

TEST(CliRun, AssumptionFailureStillWritesMetadata)
{
    cli::RunConfig config = cli::load_config(data_dir / "burgers_theorem1.json");
    config.output_dir     = scratch("burgers").string();
    EXPECT_THROW(cli::run(config), Error);
    auto meta = nlohmann::json::parse(slurp(fs::path(config.output_dir) / "metadata.json"));
    EXPECT_EQ(meta["status"], "assumptions-violated");
    EXPECT_GE(meta["error_model"]["R"].get<double>(), 1.0);
}

TEST(CliBinary, ExitCodes)
{
    const std::string out = " --out " + scratch("bin").string();
    EXPECT_EQ(run_binary("run " + (data_dir / "seir_theorem1.json").string() + out), 0);
    EXPECT_EQ(run_binary("run " + (data_dir / "burgers_theorem1.json").string() + out), 3);
    EXPECT_EQ(run_binary("run " + (data_dir / "missing_order.json").string() + out), 2);
    EXPECT_EQ(run_binary("run --model logistic -N 2 --step 0.1 --horizon 1" + out), 0);
    EXPECT_EQ(run_binary("run --model burgers -N 9 --step 0.1 --horizon 1" + out), 4);
}

TEST(CliBinary, FlagsOverrideConfig)
{
    const fs::path dir = scratch("override");
    EXPECT_EQ(run_binary("run " + (data_dir / "seir_theorem1.json").string() + " -N 2 --horizon 5 --out " +
                         dir.string()),
              0);
    auto meta = nlohmann::json::parse(slurp(dir / "metadata.json"));
    EXPECT_EQ(meta["config"]["N"], 2);
    EXPECT_EQ(count_lines(slurp(dir / "flowpipe.csv")), 51u);
}
