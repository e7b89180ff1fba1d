#include <algorithm>

#include "mesml/interchange.hpp"

namespace mesml {

namespace {

std::string quoted(std::string_view s) {
  std::string out;
  out.reserve(s.size() + 2);
  out += '"';
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      default: out += c;
    }
  }
  out += '"';
  return out;
}

class Writer {
 public:
  std::string take() { return std::move(out_); }

  void line(int level, std::string_view text) {
    out_.append(static_cast<std::size_t>(level) * 2, ' ');
    out_ += text;
    out_ += '\n';
  }

  void write(const MesSpec& spec) {
    line(0, "mesml 1");
    line(0, "ts:");
    ts_node(spec.ts_model.plant, 1);
    line(0, "pp:");
    content(spec.pp_model.content, 1, /*pools=*/nullptr);
    line(0, "mes:");
    content(spec.mes_model.content, 1, &spec.mes_model.pools);
    line(0, "links:");
    for (const Link& link : spec.link_model.links) {
      std::string text = "link id=" + link.id + " type=" + std::string(keyword(link.type));
      if (link.connector) text += " connector=" + quoted(link.connector->name);
      text += " source=" + to_string(link.source);
      text += " target=" + to_string(link.target);
      line(1, text);
    }
  }

 private:
  void ts_node(const TsNode& node, int level) {
    line(level, std::string(keyword(node.kind)) + " id=" + node.id + " name=" + quoted(node.name));
    for (const SignalAttr& attr : node.attrs) {
      line(level + 1, "attr key=" + quoted(attr.key) + " value=" + quoted(attr.value));
    }
    for (const TsNode& child : node.children) ts_node(child, level + 1);
  }

  void content(const ProcessContent& c, int level, const std::vector<Pool>* pools) {
    if (pools) {
      for (const Pool& pool : *pools) {
        line(level, "pool id=" + pool.id + " name=" + quoted(pool.name) +
                        " rank=" + std::to_string(pool.rank));
        for (const Lane& lane : pool.lanes) {
          line(level + 1, "lane id=" + lane.id + " name=" + quoted(lane.name) +
                              " rank=" + std::to_string(lane.rank));
        }
      }
    }
    for (const Activity& a : c.activities) {
      std::string text = "activity id=" + a.id + " name=" + quoted(a.name) +
                         " exec=" + std::string(keyword(a.exec)) +
                         " repetition=" + std::string(keyword(a.repetition)) +
                         " status=" + std::string(keyword(a.status));
      if (a.swimlane) text += " swimlane=" + *a.swimlane;
      if (a.declared_degrees) {
        const DegreeVector& d = *a.declared_degrees;
        text += " degrees=\"" + std::to_string(d.in_sf) + ' ' + std::to_string(d.out_sf) + ' ' +
                std::to_string(d.in_mf) + ' ' + std::to_string(d.out_mf) + ' ' +
                std::to_string(d.in_df) + ' ' + std::to_string(d.out_df) + '"';
      }
      line(level, text);
      if (a.subprocess) {
        line(level + 1, "subprocess:");
        content(*a.subprocess, level + 2, nullptr);
      }
    }
    for (const Event& e : c.events) {
      std::string text = "event id=" + e.id;
      if (!e.name.empty()) text += " name=" + quoted(e.name);
      text += " exec=" + std::string(keyword(e.exec));
      if (e.behavior) text += " behavior=" + std::string(keyword(*e.behavior));
      line(level, text);
    }
    for (const Gateway& g : c.gateways) {
      line(level, "gateway id=" + g.id + " exec=" + std::string(keyword(g.exec)) +
                      " behavior=" + std::string(keyword(g.behavior)));
    }
    for (const ActivityRef& r : c.activity_refs) {
      line(level, "activity_ref id=" + r.id + " name=" + quoted(r.name) + " target=" + r.target);
    }
    for (const SignalRef& r : c.signal_refs) {
      line(level, "signal_ref id=" + r.id + " name=" + quoted(r.name) + " target=" + r.target);
    }
    for (const DataObject& d : c.data_objects) {
      line(level, "data_object id=" + d.id + " name=" + quoted(d.name) +
                      " kind=" + std::string(keyword(d.kind)));
    }
    for (const ConnectingObject& f : c.flows) {
      line(level, "flow id=" + f.id + " kind=" + std::string(keyword(f.kind)) +
                      " source=" + f.source + " target=" + f.target);
    }
    for (const TextAnnotation& t : c.annotations) {
      line(level, "annotation id=" + t.id + " text=" + quoted(t.text));
    }
    for (const Group& g : c.groups) {
      std::string members;
      for (const ElementId& m : g.members) {
        if (!members.empty()) members += ' ';
        members += m;
      }
      line(level, "group id=" + g.id + " members=" + quoted(members));
    }
  }

  std::string out_;
};

}  // namespace

std::string serialize_spec(const MesSpec& spec) {
  Writer writer;
  writer.write(spec);
  return writer.take();
}

}  // namespace mesml
