var title = "Orders";
var count = 0;

function render(items) {
  var body = list(items);
  var header = title;
  if (count > 0) {
    body = body + count;
  }
  return wrap(header, body);
}

function row(item) {
  var cell = item.name;
  return cell;
}
