#ifndef COOPGAME_VERSION_HPP
#define COOPGAME_VERSION_HPP

#define COOPGAME_VERSION "0.1.0"

#endif
