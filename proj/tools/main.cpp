#include <cstdio>

int main() {
  std::puts("gbenard: CLI not assembled yet");
  return 0;
}
