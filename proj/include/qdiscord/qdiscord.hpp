#pragma once

#include "qdiscord/channels.hpp"
#include "qdiscord/discord.hpp"
#include "qdiscord/errors.hpp"
#include "qdiscord/golden_section.hpp"
#include "qdiscord/qcore.hpp"
#include "qdiscord/random.hpp"
#include "qdiscord/report.hpp"
#include "qdiscord/scenario.hpp"
#include "qdiscord/verify.hpp"
